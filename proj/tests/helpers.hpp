#pragma once

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <vector>

#include "gems/gem.hpp"

namespace gems::testing {

inline std::filesystem::path catalog_dir() {
  return std::filesystem::path(GEMS_CATALOG_DIR);
}

/// The 2-vertex gem over `colors` colors (every color matches 1-2).
inline Gem two_vertex_gem(int colors) {
  std::vector<std::vector<Vertex>> tables(colors, {0, 2, 1});
  return Gem::build(2, std::move(tables));
}

/// A random valid gem: independent uniform perfect matchings per color.
inline Gem random_gem(std::mt19937_64& rng, int n, int colors) {
  std::vector<std::vector<Vertex>> tables;
  std::vector<Vertex> verts(n);
  std::iota(verts.begin(), verts.end(), 1);
  for (int c = 0; c < colors; ++c) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<Vertex> m(n + 1, 0);
    for (int i = 0; i < n; i += 2) {
      m[verts[i]] = verts[i + 1];
      m[verts[i + 1]] = verts[i];
    }
    tables.push_back(std::move(m));
  }
  return Gem::build(n, std::move(tables));
}

/// A random bipartite gem: every matching pairs side {1..n/2} with side
/// {n/2+1..n} through a random bijection.
inline Gem random_bipartite_gem(std::mt19937_64& rng, int n, int colors) {
  const int half = n / 2;
  std::vector<Vertex> right(half);
  std::iota(right.begin(), right.end(), half + 1);
  std::vector<std::vector<Vertex>> tables;
  for (int c = 0; c < colors; ++c) {
    std::shuffle(right.begin(), right.end(), rng);
    std::vector<Vertex> m(n + 1, 0);
    for (int i = 0; i < half; ++i) {
      m[i + 1] = right[i];
      m[right[i]] = i + 1;
    }
    tables.push_back(std::move(m));
  }
  return Gem::build(n, std::move(tables));
}

/// Relabels vertices by a random permutation.
inline Gem random_relabel(std::mt19937_64& rng, const Gem& gem) {
  const int n = gem.vertex_count();
  std::vector<Vertex> perm(n + 1);
  std::iota(perm.begin() + 1, perm.end(), 1);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<Vertex>> tables(gem.color_count(),
                                          std::vector<Vertex>(n + 1, 0));
  for (Color c = 0; c < gem.color_count(); ++c) {
    for (Vertex v = 1; v <= n; ++v) {
      tables[c][perm[v]] = perm[gem.neighbor(c, v)];
    }
  }
  return Gem::build(n, std::move(tables));
}

/// Applies a color permutation: new color c holds the old cperm[c] matching.
inline Gem recolor(const Gem& gem, const std::vector<Color>& cperm) {
  std::vector<std::vector<Vertex>> tables;
  for (Color c = 0; c < gem.color_count(); ++c) {
    std::vector<Vertex> m(gem.vertex_count() + 1, 0);
    for (Vertex v = 1; v <= gem.vertex_count(); ++v) {
      m[v] = gem.neighbor(cperm[c], v);
    }
    tables.push_back(std::move(m));
  }
  return Gem::build(gem.vertex_count(), std::move(tables));
}

}  // namespace gems::testing
