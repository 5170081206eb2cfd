#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "pflc/causal/fate.hpp"
#include "pflc/discrete/conditional_suite.hpp"
#include "pflc/discrete/properties.hpp"
#include "pflc/discrete/xi.hpp"
#include "pflc/mixed/xi_mixed.hpp"
#include "pflc/selection/conditional.hpp"

namespace pflc::cli {
namespace {

using nlohmann::json;

[[noreturn]] void usage(const std::string& msg) { raise(ErrorCode::ParseError, msg); }

double parse_number(const std::string& s, const std::string& what) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  usage(what + ": '" + s + "' is not a number");
}

const std::string& arg(const Invocation& inv, std::size_t i, const char* what) {
  if (i >= inv.args.size()) usage(inv.command + ": missing " + what);
  return inv.args[i];
}

void expect_args(const Invocation& inv, std::size_t n, const char* shape) {
  if (inv.args.size() != n) usage(inv.command + " " + (inv.args.empty() ? "" : inv.args[0]) + ": expected " + shape);
}

std::map<std::string, std::string> key_values(const Invocation& inv, std::size_t from) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = from; i < inv.args.size(); ++i) {
    const auto eq = inv.args[i].find('=');
    if (eq == std::string::npos || eq == 0) usage("expected key=value, got '" + inv.args[i] + "'");
    kv[inv.args[i].substr(0, eq)] = inv.args[i].substr(eq + 1);
  }
  return kv;
}

fuzzy::TNorm parse_tnorm_spec(const std::string& s) {
  const auto colon = s.find(':');
  const auto kind = fuzzy::parse_tnorm_kind(s.substr(0, colon));
  const bool has_p = colon != std::string::npos;
  const double p = has_p ? parse_number(s.substr(colon + 1), "t-norm parameter") : 0.0;
  switch (kind) {
    case fuzzy::TNormKind::AczelAlsina:
      if (!has_p) usage("aczel_alsina needs a parameter, e.g. aczel_alsina:2");
      return fuzzy::TNorm::aczel_alsina(p);
    case fuzzy::TNormKind::SugenoWeber:
      if (!has_p) usage("sugeno_weber needs a parameter, e.g. sugeno_weber:1");
      return fuzzy::TNorm::sugeno_weber(p);
    case fuzzy::TNormKind::Min: return fuzzy::TNorm::min();
    case fuzzy::TNormKind::Product: return fuzzy::TNorm::product();
    case fuzzy::TNormKind::Lukasiewicz: return fuzzy::TNorm::lukasiewicz();
    case fuzzy::TNormKind::Drastic: return fuzzy::TNorm::drastic();
    case fuzzy::TNormKind::NilpotentMin: return fuzzy::TNorm::nilpotent_min();
    case fuzzy::TNormKind::HamacherProduct: return fuzzy::TNorm::hamacher_product();
  }
  usage("unknown t-norm '" + s + "'");
}

// "bern(p)", "point(v)" or the name of a workspace space.
DiscreteDist parse_dist_spec(const std::string& s, const Workspace& ws) {
  auto inner = [&](const std::string& head) -> std::optional<std::string> {
    if (s.rfind(head + "(", 0) == 0 && s.back() == ')') return s.substr(head.size() + 1, s.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto p = inner("bern")) return DiscreteDist::bernoulli(parse_number(*p, "Bernoulli parameter"));
  if (auto v = inner("point")) return DiscreteDist::point(parse_number(*v, "point value"));
  return ws.space(s);
}

// Pieces joined by '+': [a,b], (a,b], [a,b), (a,b), {p,q,...}, or "all".
mixed::EventSet parse_event(const std::string& s) {
  if (s == "all") return mixed::EventSet::whole_line();
  std::vector<mixed::Interval> intervals;
  std::vector<double> points;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    if (piece.size() < 2) usage("bad event piece '" + piece + "'");
    const char open = piece.front(), close = piece.back();
    const std::string body = piece.substr(1, piece.size() - 2);
    if (open == '{' && close == '}') {
      std::stringstream ps(body);
      std::string v;
      while (std::getline(ps, v, ',')) points.push_back(parse_number(v, "event point"));
      continue;
    }
    if ((open != '[' && open != '(') || (close != ']' && close != ')')) usage("bad event piece '" + piece + "'");
    const auto comma = body.find(',');
    if (comma == std::string::npos) usage("interval needs two bounds: '" + piece + "'");
    const double lo = parse_number(body.substr(0, comma), "interval bound");
    const double hi = parse_number(body.substr(comma + 1), "interval bound");
    intervals.push_back({lo, hi, open == '[', close == ']'});
  }
  return mixed::EventSet(std::move(intervals), std::move(points));
}

// "@v" or "@u,v": value of the target attribute, then of the condition.
std::pair<double, double> parse_at(const std::string& s) {
  if (s.empty() || s[0] != '@') usage("expected @value or @target,condition, got '" + s + "'");
  const std::string body = s.substr(1);
  const auto comma = body.find(',');
  if (comma == std::string::npos) {
    const double v = parse_number(body, "value");
    return {v, v};
  }
  return {parse_number(body.substr(0, comma), "value"), parse_number(body.substr(comma + 1), "value")};
}

json cond_json(const discrete::CondResult& r) {
  return {{"pmf", pairs_json(r.pmf.atoms())}, {"base", r.base}, {"expectation", r.expectation}};
}

const MixedCase& mixed_case(const Workspace& ws, const std::string& name) {
  auto it = ws.mixed.find(name);
  if (it == ws.mixed.end()) raise(ErrorCode::ValidationError, "unknown mixed case '" + name + "'");
  return it->second;
}

void eval_command(const Invocation& inv, const Workspace& ws, Report& rep) {
  const std::string& q = arg(inv, 0, "quantity");
  json& r = rep.results;
  r["quantity"] = q;
  if (q == "prob_omega_is" || q == "expect_xi" || q == "xi_dist" || q == "zadeh_prob" || q == "zadeh_mean") {
    expect_args(inv, 2, "<attribute>");
    const auto b = ws.binding(inv.args[1]);
    r["attribute"] = b.name();
    if (q == "prob_omega_is") r["value"] = discrete::prob_omega_is(ws.model, b);
    if (q == "expect_xi") r["value"] = discrete::expect_xi(ws.model, b);
    if (q == "zadeh_prob") r["value"] = discrete::zadeh_prob(b);
    if (q == "zadeh_mean") r["value"] = discrete::zadeh_mean(b);
    if (q == "xi_dist") {
      const auto d = discrete::xi_dist(ws.model, b);
      r["pmf"] = pairs_json(d.pmf.atoms());
      r["prob_selected"] = d.prob_selected;
      r["base"] = d.base;
      r["expectation"] = d.pmf.mean();
    }
    return;
  }
  if (q == "select_prob" || q == "xi_point") {
    expect_args(inv, 3, "<attribute> <x>");
    const auto b = ws.binding(inv.args[1]);
    const double x = parse_number(inv.args[2], "x");
    r["attribute"] = b.name();
    r["x"] = x;
    if (q == "select_prob") {
      r["value"] = selection::select_prob(ws.model, b, x);
    } else {
      const auto d = discrete::xi_point(ws.model, b, x);
      r["pmf"] = pairs_json(d.pmf().atoms());
      r["expectation"] = d.expectation();
      r["base"] = d.base;
    }
    return;
  }
  if (q == "std_cond_prob") {
    expect_args(inv, 3, "<target>|<condition> @value");
    const std::string& expr = inv.args[1];
    const auto bar = expr.find('|');
    if (bar == std::string::npos) usage("std_cond_prob: expected target|condition or target|!condition");
    const std::string target = expr.substr(0, bar);
    std::string cond = expr.substr(bar + 1);
    const bool negated = !cond.empty() && cond[0] == '!';
    if (negated) cond.erase(0, 1);
    const auto [tv, cv] = parse_at(inv.args[2]);
    const auto bt = ws.binding(target);
    const auto bc = ws.binding(cond);
    r["target"] = target;
    r["condition"] = cond;
    r["negated"] = negated;
    r["target_value"] = tv;
    r["condition_value"] = cv;
    r["tnorm"] = ws.model.tnorm.label();
    r["value"] = negated ? selection::std_cond_prob_negated(ws.model, bt, tv, bc, cv)
                         : selection::std_cond_prob(ws.model, bt, tv, bc, cv);
    return;
  }
  if (q == "joint_xi") {
    expect_args(inv, 4, "<A> <B> @x,y");
    const auto ba = ws.binding(inv.args[1]);
    const auto bb = ws.binding(inv.args[2]);
    const auto [x, y] = parse_at(inv.args[3]);
    const auto t = selection::joint_xi_table(ws.model, ba, x, bb, y);
    r["cells"] = {{"x,y", t.cells[0][0]}, {"x,y_B", t.cells[0][1]}, {"x_A,y", t.cells[1][0]}, {"x_A,y_B", t.cells[1][1]}};
    r["x"] = x;
    r["y"] = y;
    r["x_base"] = t.x_base;
    r["y_base"] = t.y_base;
    return;
  }
  if (q == "xi_mixed" || q == "expect_xi_mixed") {
    expect_args(inv, 2, "<mixed case>");
    const auto& mc = mixed_case(ws, inv.args[1]);
    r["case"] = inv.args[1];
    const double formula = mixed::expect_xi_mixed(mc.density, mc.selection, mc.base);
    r["expectation"] = formula;
    if (q == "xi_mixed") {
      const auto xi = mixed::xi_mixed(mc.density, mc.selection, mc.base);
      r["atom_location"] = mc.base;
      r["atom_mass"] = xi.atom_at(mc.base);
      r["density_mass"] = xi.density_mass();
      r["expectation_from_distribution"] = mixed::expect_mixed(xi);
    }
    return;
  }
  if (q == "prob_event_xi") {
    expect_args(inv, 3, "<mixed case> <event>");
    const auto& mc = mixed_case(ws, inv.args[1]);
    r["case"] = inv.args[1];
    r["event"] = inv.args[2];
    r["value"] = mixed::prob_event_xi(mc.density, mc.selection, mc.base, parse_event(inv.args[2]));
    return;
  }
  if (q == "cdf_mixed") {
    expect_args(inv, 3, "<mixed case> <t>");
    const auto& mc = mixed_case(ws, inv.args[1]);
    const double t = parse_number(inv.args[2], "t");
    r["case"] = inv.args[1];
    r["t"] = t;
    r["value"] = mixed::cdf_mixed(mixed::xi_mixed(mc.density, mc.selection, mc.base), t);
    return;
  }
  usage("eval: unknown quantity '" + q + "'");
}

void table_command(const Invocation& inv, const Workspace& ws, Report& rep) {
  const auto block = discrete::parse_block(arg(inv, 0, "block"));
  auto kv = key_values(inv, 1);
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) usage(std::string("table ") + std::string(discrete::to_string(block)) + ": missing " + key + "=");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  const std::string a_name = take("A");
  const std::string b_name = take("B");
  discrete::ConditionalSuite suite(ws.model, ws.binding(a_name), ws.binding(b_name), ws.joint);
  auto value = [&](const char* key, double base) {
    const std::string v = take(key);
    return v == "base" ? base : parse_number(v, key);
  };
  const double xa = suite.x_base(), yb = suite.y_base();
  json& r = rep.results;
  r["block"] = std::string(discrete::to_string(block));
  r["A"] = a_name;
  r["B"] = b_name;
  discrete::CondResult res;
  switch (block) {
    case discrete::Block::A: {
      const double y = value("y", yb), alpha = value("alpha", xa);
      r["y"] = y, r["alpha"] = alpha;
      res = suite.block_a(y, alpha);
      break;
    }
    case discrete::Block::B: {
      const double y = value("y", yb), beta = value("beta", yb);
      r["y"] = y, r["beta"] = beta;
      res = suite.block_b(y, beta);
      break;
    }
    case discrete::Block::C: {
      const double beta = value("beta", yb);
      r["beta"] = beta;
      res = suite.block_c(beta);
      break;
    }
    case discrete::Block::D: {
      const double x = value("x", xa), y = value("y", yb), alpha = value("alpha", xa);
      r["x"] = x, r["y"] = y, r["alpha"] = alpha;
      res = suite.block_d(x, y, alpha);
      break;
    }
    case discrete::Block::E: {
      const double alpha = value("alpha", xa);
      r["alpha"] = alpha;
      res = suite.block_e(alpha);
      break;
    }
    case discrete::Block::F: {
      const double alpha = value("alpha", xa);
      r["alpha"] = alpha;
      res = suite.block_f(alpha);
      break;
    }
    case discrete::Block::G: {
      const double x = value("x", xa), alpha = value("alpha", xa);
      r["x"] = x, r["alpha"] = alpha;
      res = suite.block_g(x, alpha);
      break;
    }
    case discrete::Block::H: {
      const double y = value("y", yb), alpha = value("alpha", xa);
      r["y"] = y, r["alpha"] = alpha;
      res = suite.block_h(y, alpha);
      break;
    }
    case discrete::Block::I: {
      const double alpha = value("alpha", xa);
      r["alpha"] = alpha;
      r["total_law_weighting"] = ws.joint.total_law_weighting;
      res = suite.block_i(alpha);
      if (!ws.joint.total_law_weighting && !(ws.joint.xy_independent && ws.joint.sel_a_independent_of_y))
        rep.warnings.push_back("block i weights by P(Y = beta); with dependent X, Y set joint.total_law_weighting");
      break;
    }
  }
  if (!kv.empty()) usage("table: unused key '" + kv.begin()->first + "'");
  r["result"] = cond_json(res);
}

void fate_command(const Invocation& inv, const Workspace& ws, Report& rep) {
  expect_args(inv, 1, "<experiment>");
  auto it = ws.experiments.find(inv.args[0]);
  if (it == ws.experiments.end()) raise(ErrorCode::ValidationError, "unknown experiment '" + inv.args[0] + "'");
  const ExperimentDef& e = it->second;
  const AttributeDef& low = ws.attribute(e.levels[0]);
  const AttributeDef& med = ws.attribute(e.levels[1]);
  const AttributeDef& high = ws.attribute(e.levels[2]);
  const causal::TreatmentSpace space(ws.space(e.treatment), ws.model, low.attr, low.base, med.attr, med.base, high.attr,
                                     high.base, e.require_partition);
  const causal::PotentialOutcomeModel po(e.outcome);
  const std::uint64_t seed = inv.seed.value_or(e.seed);
  const causal::FateReport f =
      e.n_units > 0 ? causal::run_fate_experiment(space, po, e.n_units, seed) : causal::fate(space, po);
  json& r = rep.results;
  r["experiment"] = inv.args[0];
  r["estimand"] = {{"e_low", f.e_low},     {"e_medium", f.e_med},   {"e_high", f.e_high},
                   {"fate_lh", f.fate_lh}, {"fate_lm", f.fate_lm}, {"fate_mh", f.fate_mh}};
  r["prob_is"] = {{"low", space.prob_is(causal::Level::Low)},
                  {"medium", space.prob_is(causal::Level::Medium)},
                  {"high", space.prob_is(causal::Level::High)}};
  if (f.estimate) {
    const auto& est = *f.estimate;
    r["estimate"] = {{"est_lh", est.est_lh},
                     {"est_lm", est.est_lm},
                     {"est_mh", est.est_mh},
                     {"se_lh", est.se_lh},
                     {"se_lm", est.se_lm},
                     {"se_mh", est.se_mh},
                     {"group_sizes",
                      {{"low", est.group_sizes[0]}, {"medium", est.group_sizes[1]}, {"high", est.group_sizes[2]}}},
                     {"group_means",
                      {{"low", est.group_means[0]}, {"medium", est.group_means[1]}, {"high", est.group_means[2]}}}};
    r["n_units"] = f.n_units;
    r["seed"] = f.seed;
  } else {
    rep.warnings.push_back("n_units is 0; Monte Carlo estimate skipped");
  }
}

json diamond_json(const discrete::DiamondReport& d, const DiscreteDist& dx, const DiscreteDist& dy) {
  json sums = json::array(), rec = json::array(), norm = json::array(), viol = json::array();
  for (std::size_t j = 0; j < dy.size(); ++j) sums.push_back({dy.atoms()[j].value, d.conditional_sums[j]});
  for (std::size_t i = 0; i < dx.size(); ++i) {
    rec.push_back({dx.atoms()[i].value, d.reconstructed[i]});
    norm.push_back({dx.atoms()[i].value, d.normalized_reconstructed[i]});
  }
  for (const auto& v : d.violations) {
    viol.push_back({{"kind", v.kind == discrete::DiamondViolation::Kind::NotAPmf ? "not_a_pmf" : "total_law"},
                    {"value", v.value},
                    {"observed", v.observed},
                    {"expected", v.expected}});
  }
  return {{"holds", d.holds},
          {"conditional_sums", sums},
          {"reconstructed", rec},
          {"normalized_reconstructed", norm},
          {"violations", viol}};
}

void check_command(const Invocation& inv, const Workspace& ws, Report& rep) {
  const std::string& what = arg(inv, 0, "property");
  json& r = rep.results;
  r["property"] = what;
  if (what == "diamond") {
    expect_args(inv, 4, "diamond <dist X> <dist Y> <t-norm>");
    const auto dx = parse_dist_spec(inv.args[1], ws);
    const auto dy = parse_dist_spec(inv.args[2], ws);
    const auto t = parse_tnorm_spec(inv.args[3]);
    r["tnorm"] = t.label();
    r["report"] = diamond_json(discrete::check_diamond(dx, dy, t), dx, dy);
    return;
  }
  if (what == "golden") {
    if (inv.args.size() == 6 && inv.args[1] == "std") {
      const auto ba = ws.binding(inv.args[2]);
      const auto bb = ws.binding(inv.args[3]);
      const double x = parse_number(inv.args[4], "x");
      const double y = parse_number(inv.args[5], "y");
      if (x == ba.base() || y == bb.base()) raise(ErrorCode::ValidationError, "golden std: x and y must differ from the bases");
      discrete::ConditionalSuite suite(ws.model, ba, bb, ws.joint);
      const double pA = suite.sel_a(x), pB = suite.sel_b(y);
      discrete::ConditionalFamily family;
      family.emplace(x, suite.block_d(x, y, x).pmf);
      if (pA < 1.0) family.emplace(ba.base(), suite.block_d(x, y, ba.base()).pmf);
      const DiscreteDist target(std::vector<Atom>{{y, pB}, {bb.base(), 1.0 - pB}});
      const DiscreteDist given(std::vector<Atom>{{x, pA}, {ba.base(), 1.0 - pA}});
      r["exempt"] = bb.base();
      r["checked_at"] = x;
      r["holds"] = discrete::check_golden(family, target, given, ws.model.tnorm, bb.base(), std::vector<double>{x});
      return;
    }
    expect_args(inv, 4, "golden <dist X> <dist Y> <t-norm> | golden std <A> <B> <x> <y>");
    const auto dx = parse_dist_spec(inv.args[1], ws);
    const auto dy = parse_dist_spec(inv.args[2], ws);
    const auto t = parse_tnorm_spec(inv.args[3]);
    json per = json::array();
    bool any = false;
    for (const Atom& a : dx.atoms()) {
      const auto fam = discrete::golden_completion(dx, dy, t, a.value);
      const bool ok = fam && discrete::check_golden(*fam, dx, dy, t, a.value);
      any = any || ok;
      per.push_back({a.value, ok});
    }
    r["tnorm"] = t.label();
    r["by_exempt"] = per;
    r["holds_for_some_exempt"] = any;
    return;
  }
  if (what == "tnorm-axioms") {
    expect_args(inv, 2, "tnorm-axioms <t-norm>");
    const auto t = parse_tnorm_spec(inv.args[1]);
    const auto a = fuzzy::check_tnorm_axioms(t);
    r["tnorm"] = t.label();
    r["max_deviation"] = {{"commutativity", a.commutativity},
                          {"identity", a.identity},
                          {"associativity", a.associativity},
                          {"monotonicity", a.monotonicity},
                          {"annihilator", a.annihilator}};
    r["holds"] = a.commutativity == 0.0 && a.identity == 0.0 && a.associativity <= 1e-12 &&
                 a.monotonicity <= 1e-12 && a.annihilator == 0.0;
    return;
  }
  if (what == "proper") {
    expect_args(inv, 2, "proper <attribute>");
    const AttributeDef& def = ws.attribute(inv.args[1]);
    const auto p = selection::check_proper(ws.model, def.attr, ws.space(def.space));
    r["attribute"] = inv.args[1];
    r["proper"] = p.proper;
    r["witnesses"] = p.witnesses;
    return;
  }
  usage("check-properties: unknown property '" + what + "'");
}

void plot_command(const Invocation& inv, const Workspace& ws, Report& rep) {
  const std::string& first = arg(inv, 0, "attribute or 'mixed'");
  json& r = rep.results;
  if (first == "mixed") {
    if (inv.args.size() < 2 || inv.args.size() > 3) usage("plot-data mixed <case> [points]");
    const auto& mc = mixed_case(ws, inv.args[1]);
    const std::size_t n = inv.args.size() == 3 ? static_cast<std::size_t>(parse_number(inv.args[2], "points")) : 201;
    if (n < 2 || n > 1000000) usage("plot-data: points must lie in [2, 1e6]");
    const auto& f = *mc.density.density();
    const auto xi = mixed::xi_mixed(mc.density, mc.selection, mc.base);
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = f.lo + (f.hi - f.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const auto cdf = mixed::cdf_grid(xi, ts);
    json dens = json::array(), sel = json::array(), xd = json::array(), cs = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      dens.push_back({ts[i], f(ts[i])});
      sel.push_back({ts[i], mc.selection(ts[i])});
      xd.push_back({ts[i], (*xi.density())(ts[i])});
      cs.push_back({ts[i], cdf[i]});
    }
    r["case"] = inv.args[1];
    r["density"] = dens;
    r["selection"] = sel;
    r["xi_density"] = xd;
    r["xi_cdf"] = cs;
    r["xi_atom"] = {{"location", mc.base}, {"mass", xi.atom_at(mc.base)}};
    return;
  }
  expect_args(inv, 1, "<attribute> | mixed <case> [points]");
  const auto b = ws.binding(first);
  const auto sel = selection::select_vector(ws.model, b);
  const auto xi = discrete::xi_dist(ws.model, b);
  json mu = json::array(), sp = json::array();
  for (std::size_t i = 0; i < b.space().size(); ++i) {
    const double x = b.space().atoms()[i].value;
    mu.push_back({x, b.attr().degree(x)});
    sp.push_back({x, sel[i]});
  }
  r["attribute"] = first;
  r["membership"] = mu;
  r["selection"] = sp;
  r["space_pmf"] = pairs_json(b.space().atoms());
  r["xi_pmf"] = pairs_json(xi.pmf.atoms());
}

std::string echo(const Invocation& inv) {
  std::string s = inv.command;
  for (const auto& a : inv.args) s += " " + a;
  if (inv.seed) s += " --seed " + std::to_string(*inv.seed);
  return s;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept { return is_validation(code) ? kExitValidation : kExitEngine; }

Report execute(const Invocation& inv, const Workspace& ws_in) {
  const Workspace* ws = &ws_in;
  std::optional<Workspace> reseeded;
  if (inv.seed) {
    reseeded = ws_in;
    reseeded->model.seed = *inv.seed;
    ws = &*reseeded;
  }
  Report rep;
  rep.command = echo(inv);
  rep.inputs_digest = ws_in.digest();
  if (inv.command == "eval") eval_command(inv, *ws, rep);
  else if (inv.command == "table") table_command(inv, *ws, rep);
  else if (inv.command == "fate") fate_command(inv, *ws, rep);
  else if (inv.command == "check-properties") check_command(inv, *ws, rep);
  else if (inv.command == "plot-data") plot_command(inv, *ws, rep);
  else usage("unknown command '" + inv.command + "' (eval, table, fate, check-properties, plot-data)");
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic fuzzy logic calculator", "pflc"};
  Invocation inv;
  std::string workspace;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("command", inv.command, "eval | table | fate | check-properties | plot-data")->required();
  // Command arguments are collected as extras so that tokens like [0,1] are
  // not expanded into lists.
  app.allow_extras();
  app.footer("Arguments after the command are passed to it, e.g.\n  pflc eval prob_omega_is early --workspace ws.json");
  app.add_option("--workspace,-w", workspace, "workspace file (JSON)");
  app.add_option("--out,-o", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", seed, "override the model and experiment seeds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pflc: " << e.what() << "\n";
    return kExitValidation;
  }
  if (*seed_opt) inv.seed = seed;
  inv.args = app.remaining();
  for (const auto& a : inv.args) {
    if (a.size() > 2 && a.compare(0, 2, "--") == 0) {
      err << "pflc: unknown option " << a << "\n";
      return kExitValidation;
    }
  }

  try {
    const Workspace ws = workspace.empty() ? parse_workspace(json::object()) : load_workspace(workspace);
    const Report rep = execute(inv, ws);
    const std::string text = format == "csv" ? rep.to_csv() : rep.to_json();
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) raise(ErrorCode::ValidationError, "cannot write '" + out_path + "'");
      f << text;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "pflc: " << inv.command << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "pflc: " << inv.command << ": " << e.what() << "\n";
    return kExitEngine;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pflc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pflc::cli
