#include "gems/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gems {

namespace {

// Deterministic BFS relabeling of the gem recolored by `cperm`
// (local color c means original color cperm[c]). Because the coloring is
// proper and the degree is d+1, the traversal from a start vertex has no
// ties, so the resulting neighbor table is a complete isomorphism invariant
// of the (start, cperm) choice.
std::vector<int> bfs_code(const Gem& gem, Vertex start,
                          const std::vector<Color>& cperm,
                          std::vector<Vertex>* visit_order = nullptr) {
  const int n = gem.vertex_count();
  const int k = gem.color_count();
  std::vector<int> label(n + 1, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(start);
  label[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (int c = 0; c < k; ++c) {
      Vertex w = gem.neighbor(cperm[c], v);
      if (label[w] == 0) {
        label[w] = static_cast<int>(order.size()) + 1;
        order.push_back(w);
      }
    }
  }
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n) * k);
  for (Vertex v : order) {
    for (int c = 0; c < k; ++c) code.push_back(label[gem.neighbor(cperm[c], v)]);
  }
  if (visit_order) *visit_order = std::move(order);
  return code;
}

struct Best {
  std::vector<int> code;
  Vertex start = 0;
  std::vector<Color> cperm;
};

Best minimal_code(const Gem& gem, ColorMode mode) {
  if (!is_connected(gem)) {
    throw Error(ErrorCode::Disconnected,
                "canonical form requires a connected gem");
  }
  const int n = gem.vertex_count();
  const int k = gem.color_count();
  std::vector<Color> cperm(k);
  std::iota(cperm.begin(), cperm.end(), 0);
  Best best;

  // scratch for the incremental runs: a stamped label array avoids clearing
  std::vector<int> label(n + 1, 0), stamp(n + 1, -1);
  std::vector<Vertex> order(n);
  std::vector<int> code(static_cast<std::size_t>(n) * k);
  int run = 0;

  do {
    for (Vertex s = 1; s <= n; ++s) {
      // build the BFS code, aborting as soon as it exceeds the current best
      ++run;
      label[s] = 1;
      stamp[s] = run;
      order[0] = s;
      int produced = 0;
      int filled = 1;
      bool better = best.start == 0;  // no best yet
      bool worse = false;
      for (int head = 0; head < n && !worse; ++head) {
        Vertex v = order[head];
        for (int c = 0; c < k; ++c) {
          Vertex w = gem.neighbor(cperm[c], v);
          if (stamp[w] != run) {
            stamp[w] = run;
            label[w] = ++filled;
            order[filled - 1] = w;
          }
          code[produced] = label[w];
          if (!better) {
            if (label[w] > best.code[produced]) {
              worse = true;
              break;
            }
            if (label[w] < best.code[produced]) better = true;
          }
          ++produced;
        }
      }
      if (!worse && better) {
        best.code.assign(code.begin(), code.begin() + produced);
        best.start = s;
        best.cperm = cperm;
      }
    }
    if (mode == ColorMode::Fixed) break;
  } while (std::next_permutation(cperm.begin(), cperm.end()));
  return best;
}

}  // namespace

std::string canonical_form(const Gem& gem, ColorMode mode) {
  Best best = minimal_code(gem, mode);
  std::ostringstream out;
  out << gem.vertex_count() << ":" << gem.color_count() << ":";
  for (std::size_t i = 0; i < best.code.size(); ++i) {
    if (i) out << ",";
    out << best.code[i];
  }
  return out.str();
}

bool verify_isomorphism(const Gem& from, const Gem& to,
                        const Isomorphism& iso) {
  const int n = from.vertex_count();
  const int k = from.color_count();
  if (to.vertex_count() != n || to.color_count() != k) return false;
  if (iso.vertex_map.size() != static_cast<std::size_t>(n) + 1) return false;
  if (iso.color_map.size() != static_cast<std::size_t>(k)) return false;
  std::vector<char> vseen(n + 1, 0), cseen(k, 0);
  for (Vertex v = 1; v <= n; ++v) {
    Vertex w = iso.vertex_map[v];
    if (w < 1 || w > n || vseen[w]) return false;
    vseen[w] = 1;
  }
  for (int c = 0; c < k; ++c) {
    Color d = iso.color_map[c];
    if (d < 0 || d >= k || cseen[d]) return false;
    cseen[d] = 1;
  }
  for (Vertex v = 1; v <= n; ++v) {
    for (int c = 0; c < k; ++c) {
      if (iso.vertex_map[from.neighbor(c, v)] !=
          to.neighbor(iso.color_map[c], iso.vertex_map[v])) {
        return false;
      }
    }
  }
  return true;
}

Gem canonical_copy(const Gem& gem, ColorMode mode) {
  Best best = minimal_code(gem, mode);
  const int n = gem.vertex_count();
  const int k = gem.color_count();
  std::vector<std::vector<Vertex>> tables(k, std::vector<Vertex>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < k; ++c) tables[c][i + 1] = best.code[i * k + c];
  }
  return Gem::build(n, std::move(tables));
}

std::optional<Isomorphism> isomorphic(const Gem& g1, const Gem& g2,
                                      ColorMode mode) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.color_count() != g2.color_count()) {
    return std::nullopt;
  }
  Best b1 = minimal_code(g1, mode);
  Best b2 = minimal_code(g2, mode);
  if (b1.code != b2.code) return std::nullopt;

  const int n = g1.vertex_count();
  const int k = g1.color_count();
  std::vector<Vertex> order1, order2;
  bfs_code(g1, b1.start, b1.cperm, &order1);
  bfs_code(g2, b2.start, b2.cperm, &order2);

  // Both traversals carry their gem onto the same canonical table, so the
  // position-wise pairing g1.order1[i] -> g2.order2[i] is an isomorphism with
  // color map b2.cperm o b1.cperm^-1.
  Isomorphism iso;
  iso.vertex_map.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) iso.vertex_map[order1[i]] = order2[i];
  iso.color_map.assign(k, 0);
  for (int c = 0; c < k; ++c) {
    // local color c: original b1.cperm[c] in g1 corresponds to b2.cperm[c]
    iso.color_map[b1.cperm[c]] = b2.cperm[c];
  }
  return iso;
}

}  // namespace gems
