#include "gems/search.hpp"

#include <algorithm>
#include <set>

namespace gems {

namespace {

/// Path bookkeeping for one color pair {a, b} where the a-matching is
/// complete and the b-matching grows edge by edge. Components are alternating
/// paths whose ends are the b-unmatched vertices; adding a b-edge either
/// joins two paths or closes a cycle, whose length must then equal the
/// target. Undo-able for backtracking.
class ChainTracker {
 public:
  ChainTracker(const std::vector<Vertex>& a_match, int n, int target_len)
      : target_(target_len), other_(n + 1, 0), len_(n + 1, 0) {
    for (Vertex v = 1; v <= n; ++v) {
      other_[v] = a_match[v];
      len_[v] = 1;
    }
  }

  int path_len(Vertex end) const { return len_[end]; }
  Vertex path_other(Vertex end) const { return other_[end]; }
  int target() const { return target_; }

  /// Try to add b-edge (u, w); returns false (state unchanged) if the move
  /// closes a cycle of the wrong length or leaves a path too long to close.
  bool add(Vertex u, Vertex w) {
    Vertex eu = other_[u], ew = other_[w];
    int lu = len_[u], lw = len_[w];
    if (eu == w) {
      // closes a cycle of lu + 1 edges
      if (lu + 1 != target_) return false;
      trail_.push_back({u, w, eu, ew, lu, lw, true});
      return true;
    }
    int joined = lu + lw + 1;
    if (joined + 1 > target_) return false;  // cannot close at target length
    trail_.push_back({u, w, eu, ew, lu, lw, false});
    other_[eu] = ew;
    other_[ew] = eu;
    len_[eu] = joined;
    len_[ew] = joined;
    return true;
  }

  void undo() {
    const Move& m = trail_.back();
    if (!m.cycle) {
      other_[m.eu] = m.u;
      other_[m.ew] = m.w;
      len_[m.eu] = m.lu;
      len_[m.ew] = m.lw;
      other_[m.u] = m.eu;
      other_[m.w] = m.ew;
      len_[m.u] = m.lu;
      len_[m.w] = m.lw;
    }
    trail_.pop_back();
  }

 private:
  struct Move {
    Vertex u, w, eu, ew;
    int lu, lw;
    bool cycle;
  };
  int target_;
  std::vector<Vertex> other_;  // path's other end (valid at path ends)
  std::vector<int> len_;       // path length in edges (valid at path ends)
  std::vector<Move> trail_;
};

struct Searcher {
  const SearchQuery& query;
  int n, rank;
  std::vector<int> lengths;                     // pair {c, c+1} target
  std::vector<std::vector<Vertex>> match;       // [color][v], 0 = unset
  std::vector<long long> pair_prunes;
  SearchStats stats;
  bool exhausted = true;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Gem>> found;

  explicit Searcher(const SearchQuery& q)
      : query(q),
        n(q.target.p()),
        rank(q.target.rank()),
        lengths(q.target.cycle()),
        match(rank, std::vector<Vertex>(q.target.p() + 1, 0)),
        pair_prunes(rank, 0) {
    for (Vertex v = 1; v <= n; v += 2) {
      match[0][v] = v + 1;
      match[0][v + 1] = v;
    }
  }

  void prune(const char* reason) { ++stats.prunes[reason]; }

  void finish_stats() {
    for (int i = 0; i < rank; ++i) {
      if (pair_prunes[i] > 0) {
        stats.prunes["pair-" + std::to_string(i)] += pair_prunes[i];
      }
    }
  }

  void run_assignment() {
    build_color(1);
  }

  void build_color(Color c) {
    ChainTracker prev(match[c - 1], n, lengths[c - 1]);
    if (c == rank - 1) {
      ChainTracker wrap(match[0], n, lengths[rank - 1]);
      extend(c, &prev, &wrap);
    } else {
      extend(c, &prev, nullptr);
    }
  }

  void extend(Color c, ChainTracker* prev, ChainTracker* wrap) {
    if (!exhausted) return;
    // branch on the end of the longest open face path: once a path reaches
    // its target length minus one the closing edge is forced, so long faces
    // cost little fan-out
    Vertex u = 0;
    int best = -1;
    for (Vertex v = 1; v <= n; ++v) {
      if (match[c][v] != 0) continue;
      int len = prev->path_len(v);
      if (wrap) len = std::max(len, wrap->path_len(v));
      if (len > best) {
        best = len;
        u = v;
      }
    }
    if (u == 0) {
      color_done(c);
      return;
    }
    // when u's path is one edge short of its face length, only the closing
    // partner can be legal; every other choice over-fills that face
    Vertex forced = 0;
    if (prev->path_len(u) == prev->target() - 1) {
      forced = prev->path_other(u);
    } else if (wrap && wrap->path_len(u) == wrap->target() - 1) {
      forced = wrap->path_other(u);
    }
    // second normalization next to "color 0 = (1 2)(3 4)...": any gem with
    // a {0,1}-face longer than 2 can be relabeled, preserving color 0, so
    // that vertex 1's color-1 partner is vertex 3
    if (c == 1 && u == 1 && n >= 4 && lengths[0] > 2) forced = 3;
    for (Vertex w = (forced ? forced : 1); w <= n; ++w) {
      if (match[c][w] == 0 && w != u) {
        if (++stats.nodes > query.max_nodes) {
          exhausted = false;
          return;
        }
        bool viable = prev->add(u, w);
        if (!viable) {
          ++pair_prunes[c - 1];
        } else if (wrap && !wrap->add(u, w)) {
          prev->undo();
          viable = false;
          ++pair_prunes[rank - 1];
        }
        if (viable) {
          match[c][u] = w;
          match[c][w] = u;
          extend(c, prev, wrap);
          match[c][u] = 0;
          match[c][w] = 0;
          if (wrap) wrap->undo();
          prev->undo();
          if (!exhausted) return;
        }
      }
      if (forced) break;
    }
  }

  void color_done(Color c) {
    if (c + 1 < rank) {
      build_color(c + 1);
      return;
    }
    leaf();
  }

  void leaf() {
    std::vector<std::vector<Vertex>> tables = match;
    Gem gem = Gem::build(n, std::move(tables));
    if (!is_connected(gem)) {
      prune("disconnected");
      return;
    }
    std::string form = canonical_form(gem, query.color_mode);
    if (!seen.insert(form).second) {
      prune("duplicate");
      return;
    }
    if (query.require_surface && surface_of(gem) != *query.require_surface) {
      prune("surface-filter");
      return;
    }
    if (query.require_gem &&
        manifold_status(gem).status != ManifoldClass::Manifold) {
      prune("gem-filter");
      return;
    }
    found.emplace_back(std::move(form), canonical_copy(gem, query.color_mode));
  }
};

}  // namespace

SearchResult search(const SearchQuery& query) {
  const int n = query.target.p();
  const int rank = query.target.rank();
  for (int len : query.target.cycle()) {
    if (len < (query.allow_two_gons ? 2 : 4)) {
      throw Error(ErrorCode::InvalidQuery,
                  "face length " + std::to_string(len) +
                      " requires the 2-gon flag");
    }
    if (n % len != 0) {
      throw Error(ErrorCode::InvalidQuery,
                  "face length " + std::to_string(len) + " does not divide p=" +
                      std::to_string(n));
    }
  }
  if (query.require_surface && rank != 3) {
    throw Error(ErrorCode::InvalidQuery,
                "surface filter applies to rank-3 queries only");
  }
  const int bound = rank == 3 ? query.max_p_rank3 : query.max_p_higher;
  if (n > bound && !query.force) {
    throw Error(ErrorCode::VertexBoundExceeded,
                "p=" + std::to_string(n) + " exceeds the feasibility bound " +
                    std::to_string(bound) + " for rank " +
                    std::to_string(rank));
  }

  Searcher searcher(query);
  if (query.color_mode == ColorMode::Permutable) {
    // any gem of this type can be color-rotated/reflected onto the stored
    // assignment, so one assignment is exhaustive
    searcher.run_assignment();
  } else {
    // fixed colors: run every distinct rotation/reflection of the length
    // assignment
    std::set<std::vector<int>> assignments;
    std::vector<int> base = query.target.cycle();
    std::vector<int> rev(base.rbegin(), base.rend());
    for (const auto& seq : {base, rev}) {
      for (std::size_t r = 0; r < seq.size(); ++r) {
        std::vector<int> rot(seq.begin() + r, seq.end());
        rot.insert(rot.end(), seq.begin(), seq.begin() + r);
        assignments.insert(rot);
      }
    }
    for (const auto& assignment : assignments) {
      searcher.lengths = assignment;
      searcher.run_assignment();
      if (!searcher.exhausted) break;
    }
  }

  searcher.finish_stats();
  SearchResult result;
  result.exhausted = searcher.exhausted;
  result.stats = std::move(searcher.stats);
  std::sort(searcher.found.begin(), searcher.found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [form, gem] : searcher.found) result.found.push_back(gem);
  return result;
}

}  // namespace gems
