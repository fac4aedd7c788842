#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "gems/canonical.hpp"
#include "gems/catalog.hpp"
#include "gems/embedding.hpp"
#include "gems/enumerator.hpp"
#include "gems/gem.hpp"
#include "gems/search.hpp"
#include "gems/topology.hpp"

namespace {

using namespace gems;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitIo = 2;
constexpr int kExitBudget = 3;

bool g_records = false;

std::string faces_summary(const std::map<std::pair<Color, Color>, int>& counts) {
  std::string out;
  for (auto [pair, n] : counts) {
    if (!out.empty()) out += " ";
    out += "{" + std::to_string(pair.first) + "," +
           std::to_string(pair.second) + "}=" + std::to_string(n);
  }
  return out;
}

NamedGem load_or_exit(const std::string& path) {
  try {
    return load_gem_file(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IoError) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kExitIo);
    }
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    std::exit(kExitFail);
  }
}

int cmd_validate(const std::string& file) {
  NamedGem named = load_or_exit(file);
  if (g_records) {
    std::cout << "status=ok name=" << named.name
              << " vertices=" << named.gem.vertex_count()
              << " colors=" << named.gem.color_count() << "\n";
  } else {
    std::cout << "OK: gem " << named.name << ", "
              << named.gem.vertex_count() << " vertices, "
              << named.gem.color_count() << " colors\n";
  }
  return kExitOk;
}

void print_class_report(const EmbeddingReport& report,
                        const std::optional<SeType>& type) {
  std::map<std::pair<Color, Color>, int> counts;
  const auto& eps = report.permutation;
  for (int i = 0; i < eps.size(); ++i) {
    Color a = eps.at(i), b = eps.at((i + 1) % eps.size());
    if (a > b) std::swap(a, b);
    counts[{a, b}] = static_cast<int>(report.faces[i].size());
  }
  if (g_records) {
    std::cout << "class=" << eps.to_string() << " v=" << report.v_count
              << " e=" << report.e_count << " f=" << report.f_count
              << " chi=" << report.euler_characteristic
              << " orientable=" << (report.orientable ? "yes" : "no")
              << " type=" << (type ? type->to_string() : "-") << "\n";
  } else {
    std::cout << "class " << eps.to_string() << ": faces "
              << faces_summary(counts) << "; V=" << report.v_count
              << " E=" << report.e_count << " F=" << report.f_count
              << " chi=" << report.euler_characteristic << "; "
              << (report.orientable ? "orientable" : "non-orientable");
    if (type) std::cout << "; type " << type->to_string();
    std::cout << "\n";
  }
}

int cmd_analyze_inner(const NamedGem& named, bool all_embeddings);

int cmd_analyze(const std::string& file, bool all_embeddings) {
  NamedGem named = load_or_exit(file);
  try {
    return cmd_analyze_inner(named, all_embeddings);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_analyze_inner(const NamedGem& named, bool all_embeddings) {
  const Gem& gem = named.gem;
  if (!is_connected(gem)) {
    std::cerr << "error (Disconnected): analyze requires a connected gem\n";
    return kExitFail;
  }

  if (!g_records) {
    std::cout << "gem " << named.name << ": " << gem.vertex_count()
              << " vertices, " << gem.color_count() << " colors, "
              << (is_bipartite(gem) ? "bipartite" : "non-bipartite") << "\n";
  }

  auto classes = all_embeddings
                     ? CyclicPermutation::all_classes(gem.color_count())
                     : std::vector<CyclicPermutation>{
                           CyclicPermutation::identity(gem.color_count())};
  for (const auto& eps : classes) {
    auto report = regular_embedding(gem, eps);
    print_class_report(report, semi_equivelar_type(gem, eps));
  }
  if (!all_embeddings && gem.color_count() > 3) {
    // scan the remaining classes for semi-equivelar ones
    for (const auto& eps : CyclicPermutation::all_classes(gem.color_count())) {
      if (eps == CyclicPermutation::identity(gem.color_count())) continue;
      if (auto type = semi_equivelar_type(gem, eps)) {
        auto report = regular_embedding(gem, eps);
        print_class_report(report, type);
      }
    }
  }

  if (gem.color_count() == 3) {
    auto surf = surface_of(gem);
    std::cout << (g_records ? "surface=" : "surface ") << surf.name() << "\n";
  }
  auto status = manifold_status(gem);
  if (g_records) {
    std::cout << "status=" << to_string(status.status);
    if (status.failure) {
      std::cout << " witness-colors=";
      for (std::size_t i = 0; i < status.failure->residue_colors.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << status.failure->residue_colors[i];
      }
      std::cout << " witness-chi=" << status.failure->chi;
    }
    std::cout << "\n";
  } else {
    std::cout << "status " << to_string(status.status);
    if (status.failure) {
      std::cout << " (residue {";
      for (std::size_t i = 0; i < status.failure->residue_colors.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << status.failure->residue_colors[i];
      }
      std::cout << "} component of " << status.failure->component_vertices.size()
                << " vertices has chi=" << status.failure->chi << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_types(long long chi, bool gems_only, bool allow_two_gons) {
  try {
    if (gems_only) {
      for (const auto& adm : gem_admissible_types(chi, allow_two_gons)) {
        for (const auto& type : adm.type.cyclic_expansions) {
          bool excluded_note = adm.admissibility == Admissibility::NotExcluded;
          if (g_records) {
            std::cout << "type=" << type.to_string()
                      << " rank=" << adm.type.multiset.rank()
                      << " p=" << adm.type.p << " filter="
                      << (excluded_note ? "not-excluded" : "admissible")
                      << "\n";
          } else {
            std::cout << type.to_string()
                      << (excluded_note ? "  (rank>3: not excluded)" : "")
                      << "\n";
          }
        }
      }
    } else {
      for (const auto& cand : enumerate_types(chi, allow_two_gons)) {
        for (const auto& type : cand.cyclic_expansions) {
          if (g_records) {
            std::cout << "type=" << type.to_string()
                      << " rank=" << cand.multiset.rank() << " p=" << cand.p
                      << "\n";
          } else {
            std::cout << type.to_string() << "\n";
          }
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_catalog_verify(const std::string& dir_flag,
                       const std::string& entry_filter) {
  std::filesystem::path dir =
      dir_flag.empty() ? default_catalog_dir() : std::filesystem::path(dir_flag);
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(dir);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::IoError ? kExitIo : kExitFail;
  }

  int failures = 0;
  int selected = 0;
  for (const auto& entry : entries) {
    if (!entry_filter.empty() && entry.name != entry_filter) continue;
    ++selected;
    auto report = verify_entry(entry);
    if (g_records) {
      for (const auto& check : report.checks) {
        std::cout << "entry=" << report.entry << " check=" << check.check_id
                  << " pass=" << (check.pass ? "yes" : "no")
                  << " detail=" << check.detail << "\n";
      }
    } else {
      if (report.pass) {
        std::cout << report.entry << ": PASS (" << report.checks.size()
                  << " checks) faces " << faces_summary(report.face_counts)
                  << "\n";
      } else {
        for (const auto& check : report.checks) {
          if (!check.pass) {
            std::cout << report.entry << ": FAIL " << check.check_id << ": "
                      << check.detail << "\n";
          }
        }
      }
    }
    if (!report.pass) ++failures;
  }
  if (selected == 0) {
    std::cerr << "error: no catalog entry named '" << entry_filter << "'\n";
    return kExitIo;
  }
  if (!g_records) {
    std::cout << "catalog: " << (selected - failures) << "/" << selected
              << " entries pass\n";
  }
  return failures == 0 ? kExitOk : kExitFail;
}

int cmd_search(const std::string& type_str, bool gems_only,
               const std::string& surface_str, long long budget, bool force,
               bool allow_two_gons, bool fix_colors) {
  auto type = SeType::parse(type_str);
  if (!type) {
    std::cerr << "error (InvalidQuery): bad type string '" << type_str
              << "'\n";
    return kExitFail;
  }
  SearchQuery query(*type);
  query.require_gem = gems_only;
  query.max_nodes = budget;
  query.force = force;
  query.allow_two_gons = allow_two_gons;
  query.color_mode = fix_colors ? ColorMode::Fixed : ColorMode::Permutable;
  if (!surface_str.empty()) {
    auto surf = Surface::parse(surface_str);
    if (!surf) {
      std::cerr << "error (InvalidQuery): bad surface string '" << surface_str
                << "'\n";
      return kExitFail;
    }
    query.require_surface = surf;
  }
  // the feasibility bound is advisory at the command line: oversized queries
  // are legal, they just tend to stop at the node budget
  if (query.target.p() > (query.target.rank() == 3 ? query.max_p_rank3
                                                   : query.max_p_higher)) {
    if (!force) {
      std::cerr << "warning: p=" << query.target.p()
                << " is beyond the feasibility bound for rank "
                << query.target.rank()
                << "; expect the node budget to run out\n";
    }
    query.force = true;
  }

  SearchResult result;
  try {
    result = search(query);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitFail;
  }

  if (g_records) {
    std::cout << "found=" << result.found.size()
              << " exhausted=" << (result.exhausted ? "yes" : "no")
              << " nodes=" << result.stats.nodes << "\n";
  } else {
    std::cout << "found " << result.found.size() << " graph"
              << (result.found.size() == 1 ? "" : "s") << " ("
              << (result.exhausted ? "search exhausted" : "budget exceeded")
              << ", " << result.stats.nodes << " nodes)\n";
  }
  for (std::size_t i = 0; i < result.found.size(); ++i) {
    std::cout << to_gem_text(result.found[i],
                             "found-" + std::to_string(i + 1));
  }
  if (!g_records && !result.stats.prunes.empty()) {
    std::cout << "prunes:";
    for (const auto& [reason, count] : result.stats.prunes) {
      std::cout << " " << reason << "=" << count;
    }
    std::cout << "\n";
  }
  return result.exhausted ? kExitOk : kExitBudget;
}

int cmd_iso(const std::string& file1, const std::string& file2,
            bool fix_colors) {
  NamedGem g1 = load_or_exit(file1);
  NamedGem g2 = load_or_exit(file2);
  ColorMode mode = fix_colors ? ColorMode::Fixed : ColorMode::Permutable;
  std::optional<Isomorphism> iso;
  try {
    iso = isomorphic(g1.gem, g2.gem, mode);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitFail;
  }
  if (!iso) {
    std::cout << (g_records ? "isomorphic=no" : "not isomorphic") << "\n";
    return kExitFail;
  }
  if (g_records) {
    std::cout << "isomorphic=yes vmap=";
    for (Vertex v = 1; v <= g1.gem.vertex_count(); ++v) {
      if (v > 1) std::cout << ",";
      std::cout << iso->vertex_map[v];
    }
    std::cout << " cmap=";
    for (std::size_t c = 0; c < iso->color_map.size(); ++c) {
      if (c) std::cout << ",";
      std::cout << iso->color_map[c];
    }
    std::cout << "\n";
  } else {
    std::cout << "isomorphic\n  vertices:";
    for (Vertex v = 1; v <= g1.gem.vertex_count(); ++v) {
      std::cout << " " << v << "->" << iso->vertex_map[v];
    }
    std::cout << "\n  colors:";
    for (std::size_t c = 0; c < iso->color_map.size(); ++c) {
      std::cout << " " << c << "->" << iso->color_map[c];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gemtool: edge-colored graph encoded manifolds: validate and analyze "
      "gem files, enumerate semi-equivelar types, verify the bundled "
      "catalog, search for graphs of a given type"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();

  std::string file, file2, entry, type_str, surface_str, dir_flag;
  bool all_embeddings = false, gems_only = false, allow_two_gons = false;
  bool force = false, fix_colors = false;
  long long chi = 0, budget = 50'000'000;

  auto* validate = app.add_subcommand("validate", "check a gem file");
  validate->add_option("file", file)->required();

  auto* analyze =
      app.add_subcommand("analyze", "embedding reports and surface data");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--all-embeddings", all_embeddings,
                    "report every cyclic permutation class");

  auto* types = app.add_subcommand(
      "types", "enumerate candidate semi-equivelar types for chi < 0");
  types->add_option("--chi", chi, "Euler characteristic (negative)")
      ->required();
  types->add_flag("--gems-only", gems_only,
                  "apply the gem admissibility filter");
  types->add_flag("--allow-2-gons", allow_two_gons,
                  "lower the face-length floor to 2");

  auto* catalog = app.add_subcommand("catalog", "bundled catalog operations");
  catalog->require_subcommand(1);
  auto* catalog_verify =
      catalog->add_subcommand("verify", "verify catalog entries end to end");
  catalog_verify->add_option("--entry", entry, "verify one entry by name");
  catalog_verify->add_option(
      "--dir", dir_flag, "catalog directory (default: $GEM_CATALOG or data/catalog)");

  auto* search_cmd = app.add_subcommand(
      "search", "enumerate graphs of a type up to isomorphism");
  search_cmd->add_option("--type", type_str, "target type, e.g. [(8^3);8]")
      ->required();
  search_cmd->add_flag("--gems-only", gems_only,
                       "keep only graphs that pass the manifold check");
  search_cmd->add_option("--surface", surface_str,
                         "require this represented surface (rank 3)");
  search_cmd->add_option("--budget", budget, "search node budget")
      ->capture_default_str();
  search_cmd->add_flag("--force", force, "ignore the feasibility bound on p");
  search_cmd->add_flag("--allow-2-gons", allow_two_gons,
                       "permit face length 2 in the target");
  search_cmd->add_flag("--fix-colors", fix_colors,
                       "count results up to vertex relabeling only");

  auto* iso = app.add_subcommand("iso", "test two gem files for isomorphism");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->add_flag("--fix-colors", fix_colors,
                "require the identity color map");

  CLI11_PARSE(app, argc, argv);
  g_records = (format == "records");

  if (budget <= 0) {
    std::cerr << "error (InvalidQuery): budget must be positive\n";
    return kExitFail;
  }

  if (*validate) return cmd_validate(file);
  if (*analyze) return cmd_analyze(file, all_embeddings);
  if (*types) return cmd_types(chi, gems_only, allow_two_gons);
  if (*catalog_verify) return cmd_catalog_verify(dir_flag, entry);
  if (*search_cmd)
    return cmd_search(type_str, gems_only, surface_str, budget, force,
                      allow_two_gons, fix_colors);
  if (*iso) return cmd_iso(file, file2, fix_colors);
  return kExitFail;
}
