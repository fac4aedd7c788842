#include "gems/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gems {

CyclicPermutation CyclicPermutation::of(std::vector<Color> seq) {
  const int k = static_cast<int>(seq.size());
  if (k < 3) {
    throw Error(ErrorCode::PermutationColorMismatch,
                "cyclic permutation needs at least 3 colors");
  }
  std::vector<char> seen(k, 0);
  for (Color c : seq) {
    if (c < 0 || c >= k || seen[c]) {
      throw Error(ErrorCode::PermutationColorMismatch,
                  "sequence is not a permutation of 0.." + std::to_string(k - 1));
    }
    seen[c] = 1;
  }
  // rotate so 0 leads
  auto zero = std::find(seq.begin(), seq.end(), 0);
  std::rotate(seq.begin(), zero, seq.end());
  // reverse if needed so seq[1] < seq[k-1]
  if (k >= 3 && seq[1] > seq[k - 1]) {
    std::reverse(seq.begin() + 1, seq.end());
  }
  return CyclicPermutation(std::move(seq));
}

CyclicPermutation CyclicPermutation::identity(int color_count) {
  std::vector<Color> seq(color_count);
  std::iota(seq.begin(), seq.end(), 0);
  return of(std::move(seq));
}

std::vector<CyclicPermutation> CyclicPermutation::all_classes(int color_count) {
  std::vector<Color> rest(color_count - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<CyclicPermutation> out;
  do {
    if (color_count >= 3 && rest.front() > rest.back()) continue;  // reversal rep
    std::vector<Color> seq;
    seq.reserve(color_count);
    seq.push_back(0);
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.push_back(of(std::move(seq)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::string CyclicPermutation::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out << ",";
    out << seq_[i];
  }
  out << ")";
  return out.str();
}

EmbeddingReport regular_embedding(const Gem& gem,
                                  const CyclicPermutation& eps) {
  if (eps.size() != gem.color_count()) {
    throw Error(ErrorCode::PermutationColorMismatch,
                "permutation over " + std::to_string(eps.size()) +
                    " colors, gem has " + std::to_string(gem.color_count()));
  }
  if (!is_connected(gem)) {
    throw Error(ErrorCode::Disconnected,
                "regular embedding requires a connected gem");
  }
  const int k = gem.color_count();
  EmbeddingReport report{eps, {}, gem.vertex_count(),
                         gem.vertex_count() * k / 2, 0, 0, false};
  report.faces.reserve(k);
  for (int i = 0; i < k; ++i) {
    report.faces.push_back(
        bicolored_cycles(gem, eps.at(i), eps.at((i + 1) % k)));
    report.f_count += static_cast<int>(report.faces.back().size());
  }
  report.euler_characteristic =
      static_cast<long long>(report.v_count) - report.e_count + report.f_count;
  report.orientable = is_bipartite(gem);
  return report;
}

std::vector<EmbeddingReport> all_regular_embeddings(const Gem& gem) {
  std::vector<EmbeddingReport> out;
  for (const auto& eps : CyclicPermutation::all_classes(gem.color_count())) {
    out.push_back(regular_embedding(gem, eps));
  }
  return out;
}

std::vector<int> vertex_face_sequence(const Gem& gem,
                                      const CyclicPermutation& eps, Vertex v) {
  if (v < 1 || v > gem.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range");
  }
  if (eps.size() != gem.color_count()) {
    throw Error(ErrorCode::PermutationColorMismatch,
                "permutation rank does not match the gem");
  }
  const int k = gem.color_count();
  std::vector<int> out(k, 0);
  for (int i = 0; i < k; ++i) {
    Color a = eps.at(i), b = eps.at((i + 1) % k);
    // walk the alternating cycle through v
    int len = 0;
    Vertex w = v;
    Color c = a;
    do {
      w = gem.neighbor(c, w);
      c = (c == a) ? b : a;
      ++len;
    } while (w != v || c != a);
    out[i] = len;
  }
  return out;
}

// ---- SeType ----

namespace {

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  const std::size_t k = cycle.size();
  std::vector<int> best = cycle;
  std::vector<int> rev(cycle.rbegin(), cycle.rend());
  for (const auto& base : {cycle, rev}) {
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<int> rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

SeType SeType::of(std::vector<int> cycle, int p) {
  if (p < 2 || p % 2 != 0) {
    throw Error(ErrorCode::InvalidQuery,
                "p must be a positive even integer, got " + std::to_string(p));
  }
  if (cycle.size() < 3) {
    throw Error(ErrorCode::InvalidQuery,
                "a type needs at least 3 face lengths");
  }
  for (int q : cycle) {
    if (q < 2 || q % 2 != 0) {
      throw Error(ErrorCode::InvalidQuery,
                  "face lengths must be even and >= 2, got " +
                      std::to_string(q));
    }
  }
  return SeType(normalize_cycle(std::move(cycle)), p);
}

std::optional<SeType> SeType::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  };
  auto number = [&]() -> std::optional<int> {
    skip_ws();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) return std::nullopt;
    i = ptr - text.data();
    return value;
  };

  if (!expect('[') || !expect('(')) return std::nullopt;
  std::vector<int> cycle;
  while (true) {
    auto q = number();
    if (!q) return std::nullopt;
    int mult = 1;
    if (expect('^')) {
      auto m = number();
      if (!m || *m < 1) return std::nullopt;
      mult = *m;
    }
    for (int j = 0; j < mult; ++j) cycle.push_back(*q);
    if (expect(',')) continue;
    if (expect(')')) break;
    return std::nullopt;
  }
  if (!expect(';')) return std::nullopt;
  auto p = number();
  if (!p) return std::nullopt;
  if (!expect(']')) return std::nullopt;
  skip_ws();
  if (i != text.size()) return std::nullopt;
  try {
    return of(std::move(cycle), *p);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string SeType::to_string() const {
  const int k = rank();
  // maximal cyclic runs of the stored rotation
  auto runs_of = [](const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> runs;  // (value, multiplicity)
    for (int v : seq) {
      if (!runs.empty() && runs.back().first == v) {
        ++runs.back().second;
      } else {
        runs.emplace_back(v, 1);
      }
    }
    return runs;
  };

  std::vector<std::pair<int, int>> chosen;
  if (std::all_of(cycle_.begin(), cycle_.end(),
                  [&](int v) { return v == cycle_[0]; })) {
    chosen = {{cycle_[0], k}};
  } else {
    // choose the rotation/reflection starting at a run boundary whose run
    // list minimizes (multiplicity descending, value ascending); this
    // reproduces the usual printed forms: (6^2,8), (10^2,4), (4,6,14),
    // (4,6,4,6), (8^2,6)
    std::vector<std::pair<int, int>> best_key;
    std::vector<int> rev(cycle_.rbegin(), cycle_.rend());
    for (const auto& base : {cycle_, rev}) {
      for (int r = 0; r < k; ++r) {
        if (base[r] == base[(r + k - 1) % k]) continue;  // not a run boundary
        std::vector<int> rot(base.begin() + r, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + r);
        auto runs = runs_of(rot);
        std::vector<std::pair<int, int>> key;
        key.reserve(runs.size());
        for (auto [v, m] : runs) key.emplace_back(-m, v);
        if (chosen.empty() || key < best_key) {
          best_key = std::move(key);
          chosen = std::move(runs);
        }
      }
    }
  }

  std::ostringstream out;
  out << "[(";
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    if (j) out << ",";
    out << chosen[j].first;
    if (chosen[j].second > 1) out << "^" << chosen[j].second;
  }
  out << ");" << p_ << "]";
  return out.str();
}

std::optional<SeType> semi_equivelar_type(const Gem& gem,
                                          const CyclicPermutation& eps) {
  auto report = regular_embedding(gem, eps);  // checks connectivity and rank
  const int k = gem.color_count();
  std::vector<int> lengths(k, 0);
  for (int i = 0; i < k; ++i) {
    int len = static_cast<int>(report.faces[i].front().size());
    for (const auto& cycle : report.faces[i]) {
      if (static_cast<int>(cycle.size()) != len) return std::nullopt;
    }
    lengths[i] = len;
  }
  return SeType::of(std::move(lengths), gem.vertex_count());
}

}  // namespace gems
