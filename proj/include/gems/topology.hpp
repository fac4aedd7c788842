#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gems/gem.hpp"

namespace gems {

/// A closed surface: chi = 2 - 2g (orientable) or 2 - k (non-orientable,
/// genus k = number of cross-caps >= 1).
struct Surface {
  bool orientable = true;
  int genus = 0;

  long long euler_characteristic() const {
    return orientable ? 2 - 2LL * genus : 2 - static_cast<long long>(genus);
  }

  /// "S2", "S_g", "RP2", "#kRP2"
  std::string name() const;

  /// Accepts "S2", "S_g", "RP2", "#kRP2" and "#k RP2".
  static std::optional<Surface> parse(std::string_view text);

  static Surface from_chi(long long chi, bool orientable);

  bool operator==(const Surface&) const = default;
};

/// Identify the surface represented by a connected 3-colored gem.
Surface surface_of(const Gem& gem);

enum class ManifoldClass { Manifold, NotManifold, Unknown };

std::string_view to_string(ManifoldClass c);

/// A residue component whose surface is not a 2-sphere; re-verifiable by
/// extracting the residue from the original gem and recomputing chi.
struct LinkFailure {
  std::vector<Color> residue_colors;      // parent color ids, size 3
  std::vector<Vertex> component_vertices;  // parent vertex ids, ascending
  long long chi = 0;                       // computed chi (!= 2)
};

struct ManifoldStatus {
  ManifoldClass status = ManifoldClass::Unknown;
  std::optional<LinkFailure> failure;  // set iff NotManifold
  std::vector<std::string> trail;      // certification notes
};

/// Three-valued manifold recognition via recursive link checks:
///   d=2 -> Manifold; d=3 -> all 3-color residue components must be spheres;
///   d=4 -> links must pass the d=3 test and certify as S^3;
///   d>4 -> NotManifold on a failed 3-color residue check, else Unknown.
ManifoldStatus manifold_status(const Gem& gem);

/// Re-runs the failed link computation from scratch on the original gem.
bool reverify_failure(const Gem& gem, const LinkFailure& failure);

/// Sufficient sphere test: true means the gem represents S^d (for d=2 via
/// chi, otherwise by greedy dipole reduction to the 2-vertex gem); false
/// means "not certified", never "not a sphere".
bool sphere_certify(const Gem& gem);

/// A pair of vertices joined by exactly the colors in `joined` whose
/// complementary residue separates them.
struct Dipole {
  Vertex u = 0, v = 0;
  std::vector<Color> joined;
};

/// First dipole in (u, v) lexicographic order, if any.
std::optional<Dipole> find_dipole(const Gem& gem);

/// Deletes the pair and welds the hanging edges color-wise.
Gem cancel_dipole(const Gem& gem, const Dipole& dipole);

}  // namespace gems
