#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "gems/canonical.hpp"
#include "gems/catalog.hpp"
#include "helpers.hpp"

using namespace gems;
using gems::testing::catalog_dir;

TEST_CASE("catalog loads thirteen entries") {
  auto entries = load_catalog(catalog_dir());
  REQUIRE(entries.size() == 13);
  CHECK(entries.front().name == "fig1");
  CHECK(entries.front().gem.vertex_count() == 8);
  CHECK(entries.front().gem.color_count() == 3);
  CHECK(entries.back().name == "fig13");
  CHECK(entries.back().gem.vertex_count() == 4);
  CHECK(entries.back().gem.color_count() == 5);
  for (const auto& entry : entries) {
    CHECK_FALSE(entry.transcription_notes.empty());
  }
}

TEST_CASE("declared types match the figure captions") {
  std::map<std::string, std::string> expected = {
      {"fig1", "[(8^3);8]"},     {"fig2", "[(6^2,8);24]"},
      {"fig3", "[(6^2,12);12]"}, {"fig4", "[(10^2,4);20]"},
      {"fig5", "[(12^2,4);12]"}, {"fig6", "[(4,6,14);84]"},
      {"fig7", "[(4,6,16);48]"}, {"fig8", "[(4,6,18);36]"},
      {"fig9", "[(4,6,24);24]"}, {"fig10", "[(4,8,10);40]"},
      {"fig11", "[(4,8,12);24]"}, {"fig12", "[(4,8,16);16]"},
      {"fig13", "[(4^5);4]"}};
  for (const auto& entry : load_catalog(catalog_dir())) {
    CHECK(entry.declared_type.to_string() == expected.at(entry.name));
  }
}

TEST_CASE("every entry verifies") {
  for (const auto& entry : load_catalog(catalog_dir())) {
    auto report = verify_entry(entry);
    CAPTURE(entry.name);
    for (const auto& check : report.checks) {
      CAPTURE(check.check_id);
      CAPTURE(check.detail);
      CHECK(check.pass);
    }
    CHECK(report.pass);
  }
}

TEST_CASE("proof-text face inventories") {
  std::map<std::string, std::map<std::pair<Color, Color>, int>> expected = {
      {"fig1", {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}}},
      {"fig2", {{{0, 1}, 4}, {{1, 2}, 4}, {{0, 2}, 3}}},
      {"fig3", {{{0, 1}, 2}, {{1, 2}, 2}, {{0, 2}, 1}}},
      {"fig5", {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 3}}},
      {"fig12", {{{0, 1}, 4}, {{1, 2}, 2}, {{0, 2}, 1}}},
  };
  for (const auto& entry : load_catalog(catalog_dir())) {
    auto it = expected.find(entry.name);
    if (it == expected.end()) continue;
    auto report = verify_entry(entry);
    for (auto [pair, count] : it->second) {
      CHECK(report.face_counts.at(pair) == count);
    }
  }
}

TEST_CASE("the twelve gem entries are pairwise non-isomorphic") {
  auto entries = load_catalog(catalog_dir());
  std::set<std::string> forms;
  for (const auto& entry : entries) {
    if (entry.name == "fig13") continue;
    forms.insert(canonical_form(entry.gem, ColorMode::Permutable));
  }
  CHECK(forms.size() == 12);
}

TEST_CASE("a corrupted entry fails verification with a named check") {
  auto entries = load_catalog(catalog_dir());
  CatalogEntry fig3 = entries[2];
  REQUIRE(fig3.name == "fig3");
  // swap the declared type for a wrong one
  fig3.declared_type = SeType::of({6, 6, 8}, 24);
  auto report = verify_entry(fig3);
  CHECK_FALSE(report.pass);
  bool type_check_failed = false;
  for (const auto& check : report.checks) {
    if (check.check_id == "semi-equivelar-type" && !check.pass) {
      type_check_failed = true;
    }
  }
  CHECK(type_check_failed);
}

TEST_CASE("loading a catalog with a broken gem file reports the error") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gems_bad_catalog";
  fs::create_directories(dir);
  {
    std::ofstream manifest(dir / "manifest.txt");
    manifest << "entry bad\n  file bad.gem\n  type [(8^3);8]\n"
             << "  status manifold\nend\n";
    std::ofstream gem(dir / "bad.gem");
    // vertex 2 appears twice in color 0
    gem << "gem bad\ncolors 3\nvertices 4\n"
        << "color 0: 1-2 2-3\ncolor 1: 1-3 2-4\ncolor 2: 1-4 2-3\n";
  }
  try {
    load_catalog(dir);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvolution);
  }
  fs::remove_all(dir);
}

TEST_CASE("missing catalog directory raises IoError") {
  try {
    load_catalog("/no/such/dir");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
