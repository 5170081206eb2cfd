#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pflc::cli {
namespace {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string scalar_text(const json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_pair_rows(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& r : j)
    if (!r.is_array() || r.size() < 2 || !r[0].is_number()) return false;
  return true;
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& scalars,
             std::vector<std::pair<std::string, const json*>>& blocks) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, scalars, blocks);
  } else if (is_pair_rows(j)) {
    blocks.emplace_back(prefix, &j);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), scalars, blocks);
  } else {
    scalars << prefix << "," << scalar_text(j) << "\n";
  }
}

}  // namespace

json round_floats(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return format_number(v);
    double r = std::stod(format_number(v));
    if (r == 0.0) r = 0.0;  // drop the sign of -0
    return r;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(round_floats(e));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = round_floats(v);
    return out;
  }
  return j;
}

std::string Report::to_json() const {
  json doc = {{"command", command},
              {"inputs_digest", inputs_digest},
              {"results", round_floats(results)},
              {"warnings", warnings}};
  return doc.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream scalars;
  std::vector<std::pair<std::string, const json*>> blocks;
  scalars << "key,value\n";
  scalars << "command," << command << "\n";
  scalars << "inputs_digest," << inputs_digest << "\n";
  flatten(results, "", scalars, blocks);
  for (const auto& w : warnings) scalars << "warning," << w << "\n";
  std::ostringstream out;
  out << scalars.str();
  for (const auto& [name, rows] : blocks) {
    out << "\n# " << name << "\n";
    const bool pmf = name.find("pmf") != std::string::npos;
    out << (pmf ? "value,prob" : "x,y");
    for (std::size_t c = 2; c < (*rows)[0].size(); ++c) out << ",c" << c;
    out << "\n";
    for (const auto& r : *rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << scalar_text(round_floats(r[c]));
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace pflc::cli
