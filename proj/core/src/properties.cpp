#include "pflc/discrete/properties.hpp"

#include <cmath>

#include "pflc/error.hpp"

namespace pflc::discrete {

DiamondReport check_diamond(const DiscreteDist& dist_x, const DiscreteDist& dist_y, const fuzzy::TNorm& t,
                            double tol) {
  const auto xs = dist_x.atoms();
  const auto ys = dist_y.atoms();
  DiamondReport report;
  report.reconstructed.assign(xs.size(), 0.0);
  report.normalized_reconstructed.assign(xs.size(), 0.0);

  std::vector<double> cond(xs.size());
  for (const Atom& y : ys) {
    if (!(y.prob > 0.0)) raise(ErrorCode::ConditionImpossible, "P(Y = y) must be positive for every y");
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      cond[i] = t(xs[i].prob, y.prob) / y.prob;
      sum += cond[i];
    }
    report.conditional_sums.push_back(sum);
    if (std::abs(sum - 1.0) > tol) report.violations.push_back({DiamondViolation::Kind::NotAPmf, y.value, sum, 1.0});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      report.reconstructed[i] += cond[i] * y.prob;
      report.normalized_reconstructed[i] += cond[i] / sum * y.prob;
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(report.reconstructed[i] - xs[i].prob) > tol)
      report.violations.push_back({DiamondViolation::Kind::TotalLaw, xs[i].value, report.reconstructed[i], xs[i].prob});
  }
  report.holds = report.violations.empty();
  return report;
}

bool check_golden(const ConditionalFamily& cond, const DiscreteDist& target, const DiscreteDist& given,
                  const fuzzy::TNorm& t, double exempt, const std::optional<std::vector<double>>& check_at,
                  double tol) {
  // Total law: sum over g of P(V = v | G = g) P(G = g) = P(V = v).
  const auto vs = target.atoms();
  std::vector<double> total(vs.size(), 0.0);
  double covered = 0.0;
  for (const auto& [g, pmf] : cond) {
    const double pg = given.prob_at(g);
    covered += pg;
    for (std::size_t i = 0; i < vs.size(); ++i) total[i] += pmf.prob_at(vs[i].value) * pg;
    for (const Atom& a : pmf.atoms())
      if (!target.contains(a.value) && a.prob > tol) return false;
  }
  if (std::abs(covered - 1.0) > tol) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (std::abs(total[i] - vs[i].prob) > tol) return false;

  auto check_one = [&](double g) {
    auto it = cond.find(g);
    if (it == cond.end()) return false;
    const double pg = given.prob_at(g);
    if (!(pg > 0.0)) return false;
    for (const Atom& v : vs) {
      if (v.value == exempt) continue;
      if (std::abs(it->second.prob_at(v.value) - t(v.prob, pg) / pg) > tol) return false;
    }
    return true;
  };
  if (check_at) {
    for (double g : *check_at)
      if (!check_one(g)) return false;
  } else {
    for (const auto& entry : cond)
      if (!check_one(entry.first)) return false;
  }
  return true;
}

std::optional<ConditionalFamily> golden_completion(const DiscreteDist& dist_x, const DiscreteDist& dist_y,
                                                   const fuzzy::TNorm& t, double exempt) {
  ConditionalFamily family;
  for (const Atom& y : dist_y.atoms()) {
    if (!(y.prob > 0.0)) continue;
    std::vector<Atom> atoms;
    double used = 0.0;
    for (const Atom& x : dist_x.atoms()) {
      if (x.value == exempt) continue;
      const double p = t(x.prob, y.prob) / y.prob;
      used += p;
      atoms.push_back({x.value, p});
    }
    const double rest = 1.0 - used;
    if (rest < -1e-12) return std::nullopt;
    if (dist_x.contains(exempt)) atoms.push_back({exempt, std::max(0.0, rest)});
    else if (std::abs(rest) > 1e-12) return std::nullopt;
    try {
      family.emplace(y.value, DiscreteDist(std::move(atoms)));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return family;
}

bool golden_for_some_exempt(const DiscreteDist& dist_x, const DiscreteDist& dist_y, const fuzzy::TNorm& t,
                            double tol) {
  for (const Atom& x : dist_x.atoms()) {
    auto family = golden_completion(dist_x, dist_y, t, x.value);
    if (family && check_golden(*family, dist_x, dist_y, t, x.value, std::nullopt, tol)) return true;
  }
  return false;
}

}  // namespace pflc::discrete
