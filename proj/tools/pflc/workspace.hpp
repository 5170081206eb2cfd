#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pflc/discrete/joint_spec.hpp"
#include "pflc/discrete_dist.hpp"
#include "pflc/fuzzy/membership.hpp"
#include "pflc/mixed/mixed_dist.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::cli {

using nlohmann::json;

struct AttributeDef {
  std::string space;
  fuzzy::FuzzyAttribute attr;
  double base = 0.0;
};

struct MixedCase {
  mixed::MixedDist density;
  mixed::SelectionField selection;
  double base = 0.0;
};

struct ExperimentDef {
  std::string treatment;           // space name
  std::array<std::string, 3> levels;  // attribute names for low, medium, high
  std::map<double, double> outcome;   // p(t)
  std::size_t n_units = 0;
  std::uint64_t seed = 0;
  bool require_partition = true;
};

/// Parsed and validated workspace. `canonical` is the normalised JSON form
/// (spaces expanded to pmfs, defaults filled in); the digest is computed
/// from it.
struct Workspace {
  json canonical;
  std::map<std::string, DiscreteDist> spaces;
  std::map<std::string, AttributeDef> attributes;
  selection::SelectionModel model;
  discrete::JointSpec joint;
  std::map<std::string, MixedCase> mixed;
  std::map<std::string, ExperimentDef> experiments;

  const AttributeDef& attribute(const std::string& name) const;
  const DiscreteDist& space(const std::string& name) const;
  selection::AttributeBinding binding(const std::string& name) const;
  /// 16 hex digits of FNV-1a over the canonical serialisation.
  std::string digest() const;
};

/// Reads and validates a workspace file. Relative CSV paths resolve against
/// the file's directory. Throws ParseError (with line or field) and
/// ValidationError.
Workspace load_workspace(const std::filesystem::path& path);
Workspace parse_workspace(const json& doc, const std::filesystem::path& base_dir = {});
Workspace parse_workspace_text(const std::string& text, const std::filesystem::path& base_dir = {});

/// Canonical JSON text with sorted keys; loading it back yields the same
/// digest.
std::string serialize_workspace(const Workspace& ws);

/// Rows of a CSV file as numbers. A first row that does not parse as numbers
/// is treated as a header. Throws ParseError citing file and line.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path, std::size_t columns);

/// Rows (center, width, prob) expanded to integer atoms k with
/// center - width/2 <= k < center + width/2, each carrying prob / (number of
/// atoms in the row).
DiscreteDist expand_interval_table(const std::vector<std::vector<double>>& rows);

}  // namespace pflc::cli
