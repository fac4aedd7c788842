#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gems {

using Vertex = int;  // 1-based ids, matching the v_1, v_2, ... labels in drawings
using Color = int;   // 0..d

enum class ErrorCode {
  OddVertexCount,
  FixedPoint,
  NotInvolution,
  VertexOutOfRange,
  MissingColor,
  SameColor,
  EmptyColorSet,
  SingletonColorSet,
  Disconnected,
  WrongRank,
  PermutationColorMismatch,
  NonNegativeChi,
  ParseError,
  InvalidQuery,
  BudgetExceeded,
  VertexBoundExceeded,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A (d+1)-regular properly edge-colored loopless multigraph, stored as one
/// fixed-point-free involution per color. Immutable after construction.
class Gem {
 public:
  /// `matchings[c]` has size n+1 (index 0 unused); entry v is the color-c
  /// neighbor of v. Throws Error on any violated invariant.
  static Gem build(int n_vertices, std::vector<std::vector<Vertex>> matchings);

  /// Convenience: build from per-color lists of matched pairs.
  static Gem from_pairs(
      int n_vertices,
      const std::vector<std::vector<std::pair<Vertex, Vertex>>>& pairs);

  int vertex_count() const { return n_; }
  int color_count() const { return static_cast<int>(match_.size()); }  // d+1

  Vertex neighbor(Color c, Vertex v) const { return match_[c][v]; }

  /// The color-c involution as pairs (a,b), a<b, ascending.
  std::vector<std::pair<Vertex, Vertex>> pairs(Color c) const;

  bool operator==(const Gem& other) const = default;

 private:
  Gem(int n, std::vector<std::vector<Vertex>> m)
      : n_(n), match_(std::move(m)) {}

  int n_ = 0;
  std::vector<std::vector<Vertex>> match_;
};

bool is_connected(const Gem& gem);
bool is_bipartite(const Gem& gem);

/// Connected components of the {i,j}-subgraph, each an alternating cyclic
/// vertex sequence. Cycles are rotated to start at their smallest vertex,
/// running toward its smaller cycle-neighbor; the list is ordered by start
/// vertex. Every cycle has even length >= 2 and the cycles partition 1..n.
std::vector<std::vector<Vertex>> bicolored_cycles(const Gem& gem, Color i,
                                                  Color j);

/// A component of the subgraph spanned by a color subset, re-indexed as a
/// stand-alone Gem together with the maps back into the parent.
struct ResidueComponent {
  Gem gem;
  std::vector<Vertex> vertex_map;  // local v (1-based) -> parent vertex
  std::vector<Color> color_map;    // local color -> parent color (ascending)
};

std::vector<ResidueComponent> residues(const Gem& gem,
                                       std::span<const Color> colors);

// ---- text format ----
//   line 1: gem <name>
//   line 2: colors <d+1>
//   line 3: vertices <n>
//   then one line per color: color <c>: a-b a-b ...
// '#' starts a comment; whitespace-insensitive; every color appears once.

struct NamedGem {
  std::string name;
  Gem gem;
};

NamedGem parse_gem_text(std::istream& in);
NamedGem parse_gem_text(const std::string& text);
NamedGem load_gem_file(const std::filesystem::path& path);
std::string to_gem_text(const Gem& gem, std::string_view name);

}  // namespace gems
