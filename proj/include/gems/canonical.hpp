#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gems/gem.hpp"

namespace gems {

enum class ColorMode { Fixed, Permutable };

/// Canonical byte string for a connected gem: two connected gems compare equal
/// iff they are isomorphic in the given mode (vertex relabeling only, or
/// vertex relabeling plus color permutation). Throws Disconnected otherwise.
std::string canonical_form(const Gem& gem, ColorMode mode);

struct Isomorphism {
  std::vector<Vertex> vertex_map;  // size n+1, index 0 unused
  std::vector<Color> color_map;    // size d+1
};

/// Checks the isomorphism condition edge by edge: uv has color i in `from`
/// iff vertex_map(u)vertex_map(v) has color color_map(i) in `to`.
bool verify_isomorphism(const Gem& from, const Gem& to, const Isomorphism& iso);

/// Witness map when the gems are isomorphic in the given mode, else nullopt.
std::optional<Isomorphism> isomorphic(const Gem& g1, const Gem& g2,
                                      ColorMode mode);

/// The gem relabeled onto its canonical form: canonical_form(canonical_copy(g))
/// == canonical_form(g), and isomorphic gems yield identical copies.
Gem canonical_copy(const Gem& gem, ColorMode mode);

}  // namespace gems
