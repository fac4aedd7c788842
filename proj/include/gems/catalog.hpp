#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gems/embedding.hpp"
#include "gems/gem.hpp"
#include "gems/topology.hpp"

namespace gems {

/// A face named in the source construction, to be matched verbatim (up to
/// rotation/reflection) against the computed bi-colored cycles.
struct FaceAudit {
  Color a = 0, b = 0;
  std::vector<Vertex> cycle;
};

struct CatalogEntry {
  std::string name;
  Gem gem;
  SeType declared_type;
  std::optional<Surface> declared_surface;
  ManifoldClass declared_status = ManifoldClass::Manifold;
  /// Expected number of {a,b}-faces, keyed by (a<b).
  std::map<std::pair<Color, Color>, int> declared_face_counts;
  std::vector<FaceAudit> audits;
  std::string transcription_notes;
};

/// Loads all entries named in `manifest.txt` in the directory.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

struct CheckResult {
  std::string check_id;
  bool pass = false;
  std::string detail;  // witness on failure, summary on success
};

struct VerificationReport {
  std::string entry;
  bool pass = false;
  std::vector<CheckResult> checks;
  /// Computed face inventory, keyed by color pair (a<b).
  std::map<std::pair<Color, Color>, int> face_counts;
};

VerificationReport verify_entry(const CatalogEntry& entry);

/// Default catalog directory: the GEM_CATALOG environment variable when set,
/// otherwise `data/catalog` relative to the current directory.
std::filesystem::path default_catalog_dir();

}  // namespace gems
