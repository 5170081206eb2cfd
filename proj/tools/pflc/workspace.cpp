#include "workspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pflc/error.hpp"
#include "pflc/random/keyed_stream.hpp"

namespace pflc::cli {
namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  raise(ErrorCode::ParseError, where + ": " + what);
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  raise(ErrorCode::ValidationError, where + ": " + what);
}

double number(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  }
  parse_fail(where, "expected a number");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

bool flag(const json& obj, const char* key, bool fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) parse_fail(where + "/" + key, "expected true or false");
  return it->get<bool>();
}

std::vector<std::vector<double>> rows_of(const json& j, std::size_t columns, const std::string& where,
                                         const std::filesystem::path& base_dir) {
  if (j.is_object() && j.contains("csv")) {
    std::filesystem::path p = text(j["csv"], where + "/csv");
    if (p.is_relative()) p = base_dir / p;
    return read_numeric_csv(p, columns);
  }
  if (!j.is_array()) parse_fail(where, "expected an array of rows or {\"csv\": path}");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != columns)
      parse_fail(at, "expected a row of " + std::to_string(columns) + " numbers");
    std::vector<double> row;
    for (std::size_t c = 0; c < columns; ++c) row.push_back(number(j[i][c], at + "/" + std::to_string(c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DiscreteDist make_dist(std::vector<Atom> atoms, const std::string& where) {
  try {
    return DiscreteDist(std::move(atoms));
  } catch (const Error& e) {
    invalid(where, e.detail());
  }
}

json dist_json(const DiscreteDist& d) {
  json rows = json::array();
  for (const Atom& a : d.atoms()) rows.push_back({a.value, a.prob});
  return rows;
}

DiscreteDist parse_space(const json& j, const std::string& where, const std::filesystem::path& base_dir) {
  if (!j.is_object() || j.size() != 1)
    parse_fail(where, "a space is an object with one of 'pmf', 'interval_table', 'uniform'");
  if (j.contains("pmf")) {
    std::vector<Atom> atoms;
    for (const auto& r : rows_of(j["pmf"], 2, where + "/pmf", base_dir)) atoms.push_back({r[0], r[1]});
    return make_dist(std::move(atoms), where + "/pmf");
  }
  if (j.contains("interval_table")) {
    const auto rows = rows_of(j["interval_table"], 3, where + "/interval_table", base_dir);
    try {
      return expand_interval_table(rows);
    } catch (const Error& e) {
      invalid(where + "/interval_table", e.detail());
    }
  }
  if (j.contains("uniform")) {
    const json& u = j["uniform"];
    std::vector<double> values;
    if (u.is_array()) {
      for (std::size_t i = 0; i < u.size(); ++i) values.push_back(number(u[i], where + "/uniform/" + std::to_string(i)));
    } else {
      const double from = number(member(u, "from", where + "/uniform"), where + "/uniform/from");
      const double to = number(member(u, "to", where + "/uniform"), where + "/uniform/to");
      const double step = u.contains("step") ? number(u["step"], where + "/uniform/step") : 1.0;
      if (!(step > 0.0) || !(to >= from) || (to - from) / step > 1e7) invalid(where + "/uniform", "bad range");
      const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
      for (std::size_t k = 0; k < n; ++k) values.push_back(from + static_cast<double>(k) * step);
    }
    try {
      return DiscreteDist::uniform(values);
    } catch (const Error& e) {
      invalid(where + "/uniform", e.detail());
    }
  }
  parse_fail(where, "a space is an object with one of 'pmf', 'interval_table', 'uniform'");
}

fuzzy::MembershipFunction parse_membership(const json& j, const std::string& where) {
  std::vector<fuzzy::Breakpoint> bps;
  if (!j.is_array()) parse_fail(where, "expected breakpoints [[x, degree], ...]");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) parse_fail(at, "expected [x, degree]");
    bps.push_back({number(j[i][0], at + "/0"), number(j[i][1], at + "/1")});
  }
  try {
    return fuzzy::MembershipFunction(std::move(bps));
  } catch (const Error& e) {
    invalid(where, e.detail());
  }
}

json membership_json(const fuzzy::MembershipFunction& m) {
  json rows = json::array();
  for (const auto& b : m.breakpoints()) rows.push_back({b.x, b.degree});
  return rows;
}

fuzzy::TNorm parse_tnorm(const json& j, const std::string& where) {
  std::string kind;
  double p = 0.0;
  bool has_p = false;
  if (j.is_string()) {
    kind = j.get<std::string>();
  } else if (j.is_object()) {
    kind = text(member(j, "kind", where), where + "/kind");
    if (j.contains("p")) {
      p = number(j["p"], where + "/p");
      has_p = true;
    }
  } else {
    parse_fail(where, "expected a t-norm name or {\"kind\": ..., \"p\": ...}");
  }
  try {
    const auto k = fuzzy::parse_tnorm_kind(kind);
    switch (k) {
      case fuzzy::TNormKind::AczelAlsina:
        if (!has_p) parse_fail(where, "aczel_alsina needs a parameter p");
        return fuzzy::TNorm::aczel_alsina(p);
      case fuzzy::TNormKind::SugenoWeber:
        if (!has_p) parse_fail(where, "sugeno_weber needs a parameter p");
        return fuzzy::TNorm::sugeno_weber(p);
      case fuzzy::TNormKind::Min: return fuzzy::TNorm::min();
      case fuzzy::TNormKind::Product: return fuzzy::TNorm::product();
      case fuzzy::TNormKind::Lukasiewicz: return fuzzy::TNorm::lukasiewicz();
      case fuzzy::TNormKind::Drastic: return fuzzy::TNorm::drastic();
      case fuzzy::TNormKind::NilpotentMin: return fuzzy::TNorm::nilpotent_min();
      case fuzzy::TNormKind::HamacherProduct: return fuzzy::TNorm::hamacher_product();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    invalid(where, e.detail());
  }
  parse_fail(where, "unknown t-norm");
}

json tnorm_json(const fuzzy::TNorm& t) {
  json j = {{"kind", std::string(fuzzy::to_string(t.kind()))}};
  if (t.is_parametric()) {
    if (std::isinf(t.parameter())) j["p"] = "inf";
    else j["p"] = t.parameter();
  }
  return j;
}

selection::SelectionModel parse_model(const json& j, const std::map<std::string, AttributeDef>& attrs,
                                      json& canon) {
  const std::string where = "model";
  selection::SelectionModel m;
  if (!j.is_object()) parse_fail(where, "expected an object");
  static const std::vector<std::string> known = {"kind",     "base_rule", "tnorm",      "scale", "scale_dist",
                                                 "exponents", "default_exponent", "siblings", "seed"};
  for (const auto& [key, v] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) parse_fail(where, "unknown field '" + key + "'");
  try {
    m.kind = selection::parse_model_kind(text(member(j, "kind", where), where + "/kind"));
    if (j.contains("base_rule")) m.base = selection::parse_selection_rule(text(j["base_rule"], where + "/base_rule"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) parse_fail(where, e.detail());
    throw;
  }
  if (j.contains("tnorm")) m.tnorm = parse_tnorm(j["tnorm"], where + "/tnorm");
  if (j.contains("scale")) m.scale = number(j["scale"], where + "/scale");
  if (j.contains("scale_dist")) {
    std::vector<Atom> atoms;
    for (const auto& r : rows_of(j["scale_dist"], 2, where + "/scale_dist", {})) atoms.push_back({r[0], r[1]});
    m.scale_dist = make_dist(std::move(atoms), where + "/scale_dist");
  }
  if (j.contains("default_exponent")) m.default_exponent = number(j["default_exponent"], where + "/default_exponent");
  if (j.contains("exponents")) {
    const json& ex = j["exponents"];
    if (!ex.is_object()) parse_fail(where + "/exponents", "expected an object keyed by attribute name");
    for (const auto& [name, v] : ex.items()) {
      const std::string at = where + "/exponents/" + name;
      if (!attrs.count(name)) invalid(at, "unknown attribute '" + name + "'");
      selection::ExponentTable table;
      if (v.is_number()) {
        table.constant = v.get<double>();
      } else {
        if (v.contains("constant")) table.constant = number(v["constant"], at + "/constant");
        if (v.contains("per_element"))
          for (const auto& r : rows_of(v["per_element"], 2, at + "/per_element", {})) table.per_element[r[0]] = r[1];
      }
      m.exponents.emplace(name, std::move(table));
    }
  }
  if (j.contains("siblings")) {
    const json& s = j["siblings"];
    if (!s.is_array()) parse_fail(where + "/siblings", "expected a list of attribute names");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string name = text(s[i], where + "/siblings/" + std::to_string(i));
      auto it = attrs.find(name);
      if (it == attrs.end()) invalid(where + "/siblings", "unknown attribute '" + name + "'");
      m.siblings.push_back(it->second.attr);
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_fail(where + "/seed", "expected a non-negative integer");
    m.seed = j["seed"].get<std::uint64_t>();
  }
  try {
    m.validate();
  } catch (const Error& e) {
    invalid(where, e.detail());
  }

  canon = json::object();
  canon["kind"] = std::string(selection::to_string(m.kind));
  canon["base_rule"] = std::string(selection::to_string(m.base));
  canon["tnorm"] = tnorm_json(m.tnorm);
  canon["scale"] = m.scale;
  canon["default_exponent"] = m.default_exponent;
  canon["seed"] = m.seed;
  if (m.scale_dist) canon["scale_dist"] = dist_json(*m.scale_dist);
  json ex = json::object();
  for (const auto& [name, table] : m.exponents) {
    json per = json::array();
    for (const auto& [x, r] : table.per_element) per.push_back({x, r});
    ex[name] = {{"constant", table.constant}, {"per_element", per}};
  }
  canon["exponents"] = ex;
  json sib = json::array();
  for (const auto& a : m.siblings) sib.push_back(a.name);
  canon["siblings"] = sib;
  return m;
}

std::optional<discrete::PairTable> parse_pair_table(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return std::nullopt;
  discrete::PairTable t;
  for (const auto& r : rows_of(j[key], 3, where + "/" + key, {})) t.set(r[0], r[1], r[2]);
  return t;
}

json pair_table_json(const discrete::PairTable& t) {
  json rows = json::array();
  for (const auto& [k, v] : t.cells()) rows.push_back({k.first, k.second, v});
  return rows;
}

discrete::JointSpec parse_joint(const json& j, json& canon) {
  const std::string where = "joint";
  if (!j.is_object()) parse_fail(where, "expected an object");
  discrete::JointSpec s;
  s.xy_independent = flag(j, "xy_independent", true, where);
  s.sel_a_independent_of_y = flag(j, "sel_a_independent_of_y", true, where);
  s.sel_b_independent_of_x = flag(j, "sel_b_independent_of_x", true, where);
  s.standard_conditional = flag(j, "standard_conditional", true, where);
  s.total_law_weighting = flag(j, "total_law_weighting", false, where);
  s.joint_xy = parse_pair_table(j, "joint_xy", where);
  s.sel_a = parse_pair_table(j, "sel_a", where);
  s.sel_b = parse_pair_table(j, "sel_b", where);
  s.cond_b_given_a = parse_pair_table(j, "cond_b_given_a", where);
  s.cond_b_given_not_a = parse_pair_table(j, "cond_b_given_not_a", where);
  try {
    s.validate();
  } catch (const Error& e) {
    invalid(where, e.detail());
  }
  canon = {{"xy_independent", s.xy_independent},
           {"sel_a_independent_of_y", s.sel_a_independent_of_y},
           {"sel_b_independent_of_x", s.sel_b_independent_of_x},
           {"standard_conditional", s.standard_conditional},
           {"total_law_weighting", s.total_law_weighting}};
  if (s.joint_xy) canon["joint_xy"] = pair_table_json(*s.joint_xy);
  if (s.sel_a) canon["sel_a"] = pair_table_json(*s.sel_a);
  if (s.sel_b) canon["sel_b"] = pair_table_json(*s.sel_b);
  if (s.cond_b_given_a) canon["cond_b_given_a"] = pair_table_json(*s.cond_b_given_a);
  if (s.cond_b_given_not_a) canon["cond_b_given_not_a"] = pair_table_json(*s.cond_b_given_not_a);
  return s;
}

mixed::Density parse_density(const json& j, const std::string& where, json& canon) {
  const std::string kind = text(member(j, "kind", where), where + "/kind");
  try {
    if (kind == "uniform") {
      const double a = number(member(j, "a", where), where + "/a");
      const double b = number(member(j, "b", where), where + "/b");
      canon = {{"kind", kind}, {"a", a}, {"b", b}};
      return mixed::Density::uniform(a, b);
    }
    if (kind == "exponential") {
      const double rate = number(member(j, "rate", where), where + "/rate");
      const double tail = j.contains("tail") ? number(j["tail"], where + "/tail") : 1e-12;
      canon = {{"kind", kind}, {"rate", rate}, {"tail", tail}};
      return mixed::Density::exponential(rate, tail);
    }
    if (kind == "normal") {
      const double mean = number(member(j, "mean", where), where + "/mean");
      const double sd = number(member(j, "sd", where), where + "/sd");
      const double tail = j.contains("tail") ? number(j["tail"], where + "/tail") : 1e-12;
      canon = {{"kind", kind}, {"mean", mean}, {"sd", sd}, {"tail", tail}};
      return mixed::Density::normal(mean, sd, tail);
    }
    if (kind == "piecewise_polynomial") {
      const json& ps = member(j, "pieces", where);
      if (!ps.is_array()) parse_fail(where + "/pieces", "expected a list of pieces");
      std::vector<mixed::Density::Piece> pieces;
      json cp = json::array();
      for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string at = where + "/pieces/" + std::to_string(i);
        mixed::Density::Piece p;
        p.lo = number(member(ps[i], "lo", at), at + "/lo");
        p.hi = number(member(ps[i], "hi", at), at + "/hi");
        const json& c = member(ps[i], "coeffs", at);
        if (!c.is_array()) parse_fail(at + "/coeffs", "expected a list of numbers");
        for (std::size_t k = 0; k < c.size(); ++k) p.coeffs.push_back(number(c[k], at + "/coeffs"));
        cp.push_back({{"lo", p.lo}, {"hi", p.hi}, {"coeffs", p.coeffs}});
        pieces.push_back(std::move(p));
      }
      canon = {{"kind", kind}, {"pieces", cp}};
      return mixed::Density::piecewise_polynomial(std::move(pieces));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    invalid(where, e.detail());
  }
  parse_fail(where + "/kind", "unknown density '" + kind + "'");
}

mixed::SelectionField parse_selection(const json& j, const std::string& where, json& canon) {
  if (j.is_string() && j.get<std::string>() == "identity") {
    canon = "identity";
    return mixed::SelectionField::identity_on_unit();
  }
  if (j.is_object() && j.contains("constant")) {
    const double p = number(j["constant"], where + "/constant");
    canon = {{"constant", p}};
    try {
      return mixed::SelectionField::constant(p);
    } catch (const Error& e) {
      invalid(where, e.detail());
    }
  }
  if (j.is_object() && j.contains("breakpoints")) {
    auto m = parse_membership(j["breakpoints"], where + "/breakpoints");
    canon = {{"breakpoints", membership_json(m)}};
    std::vector<double> kinks;
    for (const auto& b : m.breakpoints()) kinks.push_back(b.x);
    return mixed::SelectionField{[m](double x) { return m(x); }, std::move(kinks), "membership"};
  }
  parse_fail(where, "selection is \"identity\", {\"constant\": p} or {\"breakpoints\": [...]}");
}

std::size_t line_of(const std::string& text_in, std::size_t byte) {
  return static_cast<std::size_t>(
             std::count(text_in.begin(), text_in.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text_in.size())), '\n')) +
         1;
}

}  // namespace

const AttributeDef& Workspace::attribute(const std::string& name) const {
  auto it = attributes.find(name);
  if (it == attributes.end()) raise(ErrorCode::ValidationError, "unknown attribute '" + name + "'");
  return it->second;
}

const DiscreteDist& Workspace::space(const std::string& name) const {
  auto it = spaces.find(name);
  if (it == spaces.end()) raise(ErrorCode::ValidationError, "unknown space '" + name + "'");
  return it->second;
}

selection::AttributeBinding Workspace::binding(const std::string& name) const {
  const AttributeDef& def = attribute(name);
  return selection::AttributeBinding(model, def.attr, def.base, space(def.space));
}

std::string Workspace::digest() const {
  const std::uint64_t h = random::hash_bytes(canonical.dump());
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cell = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) numeric = false;
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    const std::string at = path.string() + ":" + std::to_string(lineno);
    if (!numeric) {
      if (rows.empty() && lineno == 1) continue;  // header
      raise(ErrorCode::ParseError, at + ": non-numeric field");
    }
    if (row.size() != columns)
      raise(ErrorCode::ParseError, at + ": expected " + std::to_string(columns) + " columns, found " +
                                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

DiscreteDist expand_interval_table(const std::vector<std::vector<double>>& rows) {
  std::map<double, double> mass;
  for (const auto& r : rows) {
    const double center = r[0], width = r[1], prob = r[2];
    if (!(width > 0.0)) raise(ErrorCode::ValidationError, "interval width must be positive");
    const double lo = std::ceil(center - width / 2.0);
    std::vector<double> ks;
    for (double k = lo; k < center + width / 2.0; k += 1.0) ks.push_back(k);
    if (ks.empty()) raise(ErrorCode::ValidationError, "interval around " + describe(center) + " holds no integer");
    for (double k : ks) mass[k] += prob / static_cast<double>(ks.size());
  }
  std::vector<Atom> atoms;
  for (const auto& [k, p] : mass) atoms.push_back({k, p});
  return DiscreteDist(std::move(atoms));
}

Workspace parse_workspace(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) raise(ErrorCode::ParseError, "workspace: expected a JSON object");
  for (const auto& [key, v] : doc.items()) {
    static const std::vector<std::string> known = {"spaces", "attributes", "model", "joint", "mixed", "experiments"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      raise(ErrorCode::ParseError, "workspace: unknown section '" + key + "'");
  }
  Workspace ws;
  json canon = json::object();

  json cs = json::object();
  if (doc.contains("spaces")) {
    const json& spaces = doc["spaces"];
    if (!spaces.is_object()) parse_fail("spaces", "expected an object keyed by name");
    for (const auto& [name, spec] : spaces.items()) {
      DiscreteDist d = parse_space(spec, "spaces/" + name, base_dir);
      cs[name] = {{"pmf", dist_json(d)}};
      ws.spaces.emplace(name, std::move(d));
    }
  }
  canon["spaces"] = cs;

  // Attributes first without bases, so the model can refer to siblings.
  json attrs_doc = doc.value("attributes", json::object());
  if (!attrs_doc.is_object()) parse_fail("attributes", "expected an object keyed by name");
  for (const auto& [name, spec] : attrs_doc.items()) {
    const std::string where = "attributes/" + name;
    AttributeDef def;
    def.space = text(member(spec, "space", where), where + "/space");
    if (!ws.spaces.count(def.space)) invalid(where + "/space", "unknown space '" + def.space + "'");
    def.attr = fuzzy::FuzzyAttribute(name, parse_membership(member(spec, "breakpoints", where), where + "/breakpoints"));
    ws.attributes.emplace(name, std::move(def));
  }

  json cm;
  ws.model = parse_model(doc.value("model", json{{"kind", "simple_fuzzy"}}), ws.attributes, cm);
  canon["model"] = cm;

  json ca = json::object();
  for (auto& [name, def] : ws.attributes) {
    const std::string where = "attributes/" + name;
    const json& spec = attrs_doc[name];
    const DiscreteDist& space = ws.spaces.at(def.space);
    try {
      if (!spec.contains("base") || (spec["base"].is_string() && spec["base"] == "min")) {
        def.base = selection::default_base(ws.model, def.attr, space, false);
      } else if (spec["base"].is_string() && spec["base"] == "max") {
        def.base = selection::default_base(ws.model, def.attr, space, true);
      } else {
        def.base = number(spec["base"], where + "/base");
      }
      selection::AttributeBinding check(ws.model, def.attr, def.base, space);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      invalid(where, std::string("attribute is not proper: ") + e.detail());
    }
    ca[name] = {{"space", def.space}, {"breakpoints", membership_json(def.attr.membership)}, {"base", def.base}};
  }
  canon["attributes"] = ca;

  json cj;
  ws.joint = parse_joint(doc.value("joint", json::object()), cj);
  canon["joint"] = cj;

  json cx = json::object();
  if (doc.contains("mixed")) {
    const json& mx = doc["mixed"];
    if (!mx.is_object()) parse_fail("mixed", "expected an object keyed by name");
    for (const auto& [name, spec] : mx.items()) {
      const std::string where = "mixed/" + name;
      json cd, csel;
      mixed::Density dens = parse_density(member(spec, "density", where), where + "/density", cd);
      mixed::SelectionField sel = parse_selection(member(spec, "selection", where), where + "/selection", csel);
      const double base = number(member(spec, "base", where), where + "/base");
      try {
        ws.mixed.emplace(name, MixedCase{mixed::MixedDist::from_density(std::move(dens)), std::move(sel), base});
      } catch (const Error& e) {
        invalid(where, e.detail());
      }
      cx[name] = {{"density", cd}, {"selection", csel}, {"base", base}};
    }
  }
  canon["mixed"] = cx;

  json ce = json::object();
  if (doc.contains("experiments")) {
    const json& ex = doc["experiments"];
    if (!ex.is_object()) parse_fail("experiments", "expected an object keyed by name");
    for (const auto& [name, spec] : ex.items()) {
      const std::string where = "experiments/" + name;
      ExperimentDef e;
      e.treatment = text(member(spec, "treatment", where), where + "/treatment");
      if (!ws.spaces.count(e.treatment)) invalid(where + "/treatment", "unknown space '" + e.treatment + "'");
      const json& lv = member(spec, "levels", where);
      const char* keys[] = {"low", "medium", "high"};
      for (int i = 0; i < 3; ++i) {
        e.levels[i] = text(member(lv, keys[i], where + "/levels"), where + "/levels/" + keys[i]);
        auto it = ws.attributes.find(e.levels[i]);
        if (it == ws.attributes.end()) invalid(where + "/levels", "unknown attribute '" + e.levels[i] + "'");
        if (it->second.space != e.treatment)
          invalid(where + "/levels", "attribute '" + e.levels[i] + "' is not defined on '" + e.treatment + "'");
      }
      for (const auto& r : rows_of(member(spec, "outcome", where), 2, where + "/outcome", base_dir)) {
        if (!(r[1] >= 0.0 && r[1] <= 1.0)) invalid(where + "/outcome", "p(t) must lie in [0,1]");
        e.outcome[r[0]] = r[1];
      }
      for (const Atom& a : ws.spaces.at(e.treatment).atoms())
        if (!e.outcome.count(a.value)) invalid(where + "/outcome", "no p(t) for t = " + describe(a.value));
      if (spec.contains("n_units")) {
        if (!spec["n_units"].is_number_unsigned()) parse_fail(where + "/n_units", "expected a non-negative integer");
        e.n_units = spec["n_units"].get<std::size_t>();
      }
      if (spec.contains("seed")) {
        if (!spec["seed"].is_number_unsigned()) parse_fail(where + "/seed", "expected a non-negative integer");
        e.seed = spec["seed"].get<std::uint64_t>();
      }
      e.require_partition = flag(spec, "require_partition", true, where);
      json out = json::array();
      for (const auto& [t, p] : e.outcome) out.push_back({t, p});
      ce[name] = {{"treatment", e.treatment},
                  {"levels", {{"low", e.levels[0]}, {"medium", e.levels[1]}, {"high", e.levels[2]}}},
                  {"outcome", out},
                  {"n_units", e.n_units},
                  {"seed", e.seed},
                  {"require_partition", e.require_partition}};
      ws.experiments.emplace(name, std::move(e));
    }
  }
  canon["experiments"] = ce;
  ws.canonical = std::move(canon);
  return ws;
}

Workspace parse_workspace_text(const std::string& text_in, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text_in);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::ParseError, "line " + std::to_string(line_of(text_in, e.byte)) + ": " + e.what());
  }
  return parse_workspace(doc, base_dir);
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::ParseError, path.string() + ": cannot open workspace");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_workspace_text(buf.str(), path.parent_path());
  } catch (const Error& e) {
    raise(e.code(), path.string() + ": " + e.detail());
  }
}

std::string serialize_workspace(const Workspace& ws) { return ws.canonical.dump(2) + "\n"; }

}  // namespace pflc::cli
