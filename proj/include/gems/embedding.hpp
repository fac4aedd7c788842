#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gems/gem.hpp"

namespace gems {

/// A cyclic permutation eps = (eps_0, ..., eps_d) of the color set, regarded
/// up to rotation and reversal. Stored rotated so eps_0 = 0 and reversed if
/// needed so eps_1 < eps_d.
class CyclicPermutation {
 public:
  /// Normalizes; throws PermutationColorMismatch unless `seq` is a
  /// permutation of 0..seq.size()-1 with size >= 3.
  static CyclicPermutation of(std::vector<Color> seq);

  static CyclicPermutation identity(int color_count);

  /// All cyclic classes of 0..color_count-1: d!/2 of them for d >= 2.
  static std::vector<CyclicPermutation> all_classes(int color_count);

  int size() const { return static_cast<int>(seq_.size()); }
  Color at(int i) const { return seq_[i]; }
  const std::vector<Color>& sequence() const { return seq_; }
  std::string to_string() const;

  bool operator==(const CyclicPermutation&) const = default;

 private:
  explicit CyclicPermutation(std::vector<Color> seq) : seq_(std::move(seq)) {}
  std::vector<Color> seq_;
};

/// Face data and surface invariants of the regular embedding induced by a
/// cyclic color permutation.
struct EmbeddingReport {
  CyclicPermutation permutation;
  /// faces[i] = the {eps_i, eps_{i+1}}-bi-colored cycles (indices mod d+1).
  std::vector<std::vector<std::vector<Vertex>>> faces;
  int v_count = 0;
  int e_count = 0;
  int f_count = 0;
  long long euler_characteristic = 0;
  bool orientable = false;
};

EmbeddingReport regular_embedding(const Gem& gem,
                                  const CyclicPermutation& eps);

/// One report per cyclic permutation class.
std::vector<EmbeddingReport> all_regular_embeddings(const Gem& gem);

/// Entry i is the length of the unique {eps_i, eps_{i+1}}-cycle through v.
std::vector<int> vertex_face_sequence(const Gem& gem,
                                      const CyclicPermutation& eps, Vertex v);

/// A semi-equivelar type: vertex count p plus the cyclic sequence of face
/// lengths, normalized to the lexicographically smallest rotation/reflection.
class SeType {
 public:
  /// Validates (p positive even, lengths even >= 2) and normalizes.
  static SeType of(std::vector<int> cycle, int p);

  /// Parses the `[(t1,...,tk);p]` grammar where each t is `q` or `q^m`.
  static std::optional<SeType> parse(std::string_view text);

  int p() const { return p_; }
  int rank() const { return static_cast<int>(cycle_.size()); }  // d+1
  const std::vector<int>& cycle() const { return cycle_; }

  /// Renders with exponent grouping over maximal cyclic runs, e.g.
  /// "[(6^2,8);24]"; cyclically ordered sequences keep their order, e.g.
  /// "[(4,6,4,6);12]".
  std::string to_string() const;

  bool operator==(const SeType&) const = default;
  bool operator<(const SeType& o) const {
    return cycle_ != o.cycle_ ? cycle_ < o.cycle_ : p_ < o.p_;
  }

 private:
  SeType(std::vector<int> cycle, int p) : cycle_(std::move(cycle)), p_(p) {}
  std::vector<int> cycle_;
  int p_ = 0;
};

/// Nonempty iff for each consecutive pair all its bi-colored cycles share one
/// length. Lengths 2 are reported truthfully; callers filter when they
/// require >= 4.
std::optional<SeType> semi_equivelar_type(const Gem& gem,
                                          const CyclicPermutation& eps);

}  // namespace gems
