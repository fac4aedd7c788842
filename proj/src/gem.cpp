#include "gems/gem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gems {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::FixedPoint: return "FixedPoint";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MissingColor: return "MissingColor";
    case ErrorCode::SameColor: return "SameColor";
    case ErrorCode::EmptyColorSet: return "EmptyColorSet";
    case ErrorCode::SingletonColorSet: return "SingletonColorSet";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::PermutationColorMismatch: return "PermutationColorMismatch";
    case ErrorCode::NonNegativeChi: return "NonNegativeChi";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::VertexBoundExceeded: return "VertexBoundExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

Gem Gem::build(int n_vertices, std::vector<std::vector<Vertex>> matchings) {
  if (n_vertices < 2 || n_vertices % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "vertex count must be a positive even number, got " +
                    std::to_string(n_vertices));
  }
  if (matchings.size() < 2) {
    throw Error(ErrorCode::MissingColor,
                "need at least 2 colors, got " +
                    std::to_string(matchings.size()));
  }
  for (std::size_t c = 0; c < matchings.size(); ++c) {
    auto& m = matchings[c];
    if (m.size() != static_cast<std::size_t>(n_vertices) + 1) {
      throw Error(ErrorCode::MissingColor,
                  "color " + std::to_string(c) + " table has wrong size");
    }
    m[0] = 0;
    for (Vertex v = 1; v <= n_vertices; ++v) {
      Vertex w = m[v];
      if (w < 1 || w > n_vertices) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "color " + std::to_string(c) + ": vertex " +
                        std::to_string(v) + " maps to " + std::to_string(w));
      }
      if (w == v) {
        throw Error(ErrorCode::FixedPoint,
                    "color " + std::to_string(c) + ": loop at vertex " +
                        std::to_string(v));
      }
      if (m[w] != v) {
        throw Error(ErrorCode::NotInvolution,
                    "color " + std::to_string(c) + ": " + std::to_string(v) +
                        " -> " + std::to_string(w) + " but " +
                        std::to_string(w) + " -> " + std::to_string(m[w]));
      }
    }
  }
  return Gem(n_vertices, std::move(matchings));
}

Gem Gem::from_pairs(
    int n_vertices,
    const std::vector<std::vector<std::pair<Vertex, Vertex>>>& pairs) {
  if (n_vertices < 2 || n_vertices % 2 != 0) {
    throw Error(ErrorCode::OddVertexCount,
                "vertex count must be a positive even number, got " +
                    std::to_string(n_vertices));
  }
  std::vector<std::vector<Vertex>> tables;
  tables.reserve(pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    std::vector<Vertex> m(n_vertices + 1, 0);
    for (auto [a, b] : pairs[c]) {
      if (a < 1 || a > n_vertices || b < 1 || b > n_vertices) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "color " + std::to_string(c) + ": pair " +
                        std::to_string(a) + "-" + std::to_string(b));
      }
      if (a == b) {
        throw Error(ErrorCode::FixedPoint, "color " + std::to_string(c) +
                                               ": loop at vertex " +
                                               std::to_string(a));
      }
      if (m[a] != 0 || m[b] != 0) {
        throw Error(ErrorCode::NotInvolution,
                    "color " + std::to_string(c) + ": vertex " +
                        std::to_string(m[a] != 0 ? a : b) +
                        " matched more than once");
      }
      m[a] = b;
      m[b] = a;
    }
    for (Vertex v = 1; v <= n_vertices; ++v) {
      if (m[v] == 0) {
        throw Error(ErrorCode::NotInvolution,
                    "color " + std::to_string(c) + ": vertex " +
                        std::to_string(v) + " unmatched");
      }
    }
    tables.push_back(std::move(m));
  }
  return build(n_vertices, std::move(tables));
}

std::vector<std::pair<Vertex, Vertex>> Gem::pairs(Color c) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(n_ / 2);
  for (Vertex v = 1; v <= n_; ++v) {
    Vertex w = match_[c][v];
    if (v < w) out.emplace_back(v, w);
  }
  return out;
}

bool is_connected(const Gem& gem) {
  const int n = gem.vertex_count();
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> stack = {1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Color c = 0; c < gem.color_count(); ++c) {
      Vertex w = gem.neighbor(c, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_bipartite(const Gem& gem) {
  const int n = gem.vertex_count();
  std::vector<int> side(n + 1, -1);
  for (Vertex s = 1; s <= n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack = {s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c < gem.color_count(); ++c) {
        Vertex w = gem.neighbor(c, v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> bicolored_cycles(const Gem& gem, Color i,
                                                  Color j) {
  if (i == j) {
    throw Error(ErrorCode::SameColor,
                "bi-colored cycles need two distinct colors, got " +
                    std::to_string(i) + " twice");
  }
  if (i < 0 || j < 0 || i >= gem.color_count() || j >= gem.color_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "color out of range: " + std::to_string(std::max(i, j)));
  }
  const int n = gem.vertex_count();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    // walk the alternating cycle; start toward the smaller neighbor so the
    // stored sequence is rotation/direction-normalized
    Color first = gem.neighbor(i, s) <= gem.neighbor(j, s) ? i : j;
    std::vector<Vertex> cycle;
    Vertex v = s;
    Color c = first;
    do {
      cycle.push_back(v);
      seen[v] = 1;
      v = gem.neighbor(c, v);
      c = (c == i) ? j : i;
    } while (v != s);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<ResidueComponent> residues(const Gem& gem,
                                       std::span<const Color> colors) {
  if (colors.empty()) {
    throw Error(ErrorCode::EmptyColorSet, "residue needs a nonempty color set");
  }
  if (colors.size() == 1) {
    throw Error(ErrorCode::SingletonColorSet,
                "residue needs at least 2 colors");
  }
  std::vector<Color> cs(colors.begin(), colors.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  for (Color c : cs) {
    if (c < 0 || c >= gem.color_count()) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "color out of range: " + std::to_string(c));
    }
  }

  const int n = gem.vertex_count();
  std::vector<char> seen(n + 1, 0);
  std::vector<ResidueComponent> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Color c : cs) {
        Vertex w = gem.neighbor(c, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Vertex> local(n + 1, 0);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      local[comp[k]] = static_cast<Vertex>(k) + 1;
    }
    std::vector<std::vector<Vertex>> tables;
    tables.reserve(cs.size());
    for (Color c : cs) {
      std::vector<Vertex> m(comp.size() + 1, 0);
      for (Vertex v : comp) m[local[v]] = local[gem.neighbor(c, v)];
      tables.push_back(std::move(m));
    }
    out.push_back(ResidueComponent{
        Gem::build(static_cast<int>(comp.size()), std::move(tables)),
        std::move(comp), cs});
  }
  return out;
}

// ---- text format ----

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace

NamedGem parse_gem_text(std::istream& in) {
  std::string name;
  int colors = -1;
  int vertices = -1;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs;
  std::vector<char> color_seen;

  std::string raw;
  int lineno = 0;
  int header = 0;  // how many of the three header lines were read
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string key;
    if (!(line >> key)) continue;  // blank

    if (key == "gem") {
      if (header != 0) parse_fail(lineno, "unexpected 'gem' line");
      if (!(line >> name)) parse_fail(lineno, "missing gem name");
      header = 1;
    } else if (key == "colors") {
      if (header != 1) parse_fail(lineno, "'colors' must follow 'gem'");
      if (!(line >> colors) || colors < 2)
        parse_fail(lineno, "bad color count");
      pairs.assign(colors, {});
      color_seen.assign(colors, 0);
      header = 2;
    } else if (key == "vertices") {
      if (header != 2) parse_fail(lineno, "'vertices' must follow 'colors'");
      if (!(line >> vertices) || vertices < 1)
        parse_fail(lineno, "bad vertex count");
      header = 3;
    } else if (key == "color") {
      if (header != 3) parse_fail(lineno, "'color' lines come after the header");
      int c;
      if (!(line >> c)) parse_fail(lineno, "missing color id");
      std::string colon;
      if (!(line >> colon) || colon != ":")
        parse_fail(lineno, "expected ':' after color id");
      if (c < 0 || c >= colors)
        parse_fail(lineno, "color id " + std::to_string(c) + " out of range");
      if (color_seen[c])
        parse_fail(lineno, "color " + std::to_string(c) + " listed twice");
      color_seen[c] = 1;
      std::string tok;
      while (line >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
          parse_fail(lineno, "expected a-b pair, got '" + tok + "'");
        try {
          std::size_t used_a = 0, used_b = 0;
          int a = std::stoi(tok.substr(0, dash), &used_a);
          int b = std::stoi(tok.substr(dash + 1), &used_b);
          if (used_a != dash || used_b != tok.size() - dash - 1)
            parse_fail(lineno, "expected a-b pair, got '" + tok + "'");
          pairs[c].emplace_back(a, b);
        } catch (const std::invalid_argument&) {
          parse_fail(lineno, "expected a-b pair, got '" + tok + "'");
        } catch (const std::out_of_range&) {
          parse_fail(lineno, "vertex id out of range in '" + tok + "'");
        }
      }
    } else {
      parse_fail(lineno, "unknown directive '" + key + "'");
    }
  }
  if (header < 3) parse_fail(lineno, "incomplete header");
  for (int c = 0; c < colors; ++c) {
    if (!color_seen[c]) {
      throw Error(ErrorCode::MissingColor,
                  "color " + std::to_string(c) + " has no matching line");
    }
  }
  return NamedGem{std::move(name), Gem::from_pairs(vertices, pairs)};
}

NamedGem parse_gem_text(const std::string& text) {
  std::istringstream in(text);
  return parse_gem_text(in);
}

NamedGem load_gem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  return parse_gem_text(in);
}

std::string to_gem_text(const Gem& gem, std::string_view name) {
  std::ostringstream out;
  out << "gem " << (name.empty() ? "unnamed" : name) << "\n";
  out << "colors " << gem.color_count() << "\n";
  out << "vertices " << gem.vertex_count() << "\n";
  for (Color c = 0; c < gem.color_count(); ++c) {
    out << "color " << c << ":";
    for (auto [a, b] : gem.pairs(c)) out << " " << a << "-" << b;
    out << "\n";
  }
  return out.str();
}

}  // namespace gems
