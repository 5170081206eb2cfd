#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pflc::cli {

/// Command result. Serialisation sorts keys and rounds every float to 12
/// significant digits so identical inputs give byte-identical output.
struct Report {
  std::string command;
  std::string inputs_digest;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;

  std::string to_json() const;
  /// Scalars as key,value rows; each array of numeric pairs as its own
  /// block headed by "# <name>".
  std::string to_csv() const;
};

/// Copy of `j` with every float replaced by its %.12g rounding.
nlohmann::json round_floats(const nlohmann::json& j);

/// JSON array [[v, p], ...].
template <typename Atoms>
nlohmann::json pairs_json(const Atoms& atoms) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& a : atoms) rows.push_back({a.value, a.prob});
  return rows;
}

}  // namespace pflc::cli
