#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gems/canonical.hpp"
#include "gems/embedding.hpp"
#include "gems/gem.hpp"
#include "gems/topology.hpp"

namespace gems {

struct SearchQuery {
  explicit SearchQuery(SeType target_type) : target(std::move(target_type)) {}

  SeType target;
  bool require_gem = false;
  std::optional<Surface> require_surface;
  ColorMode color_mode = ColorMode::Permutable;
  long long max_nodes = 50'000'000;
  bool allow_two_gons = false;
  /// Feasibility bounds on p; exceeding them without `force` throws
  /// VertexBoundExceeded.
  int max_p_rank3 = 24;
  int max_p_higher = 8;
  bool force = false;
};

struct SearchStats {
  long long nodes = 0;
  std::map<std::string, long long> prunes;
};

struct SearchResult {
  /// Canonically relabeled, duplicate-free under the query's color mode,
  /// ordered by canonical form.
  std::vector<Gem> found;
  /// True iff the space was fully explored within budget; then the list is
  /// complete up to isomorphism.
  bool exhausted = false;
  SearchStats stats;
};

/// Exhaustive backtracking over per-color perfect matchings with color 0
/// normalized to (1 2)(3 4)..., pruning partial bi-colored cycles against the
/// target face lengths, with canonical dedup at the leaves.
SearchResult search(const SearchQuery& query);

}  // namespace gems
