#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "pflc/causal/fate.hpp"
#include "pflc/discrete_dist.hpp"
#include "pflc/fuzzy/membership.hpp"
#include "pflc/fuzzy/tnorm.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::testing {

inline constexpr std::array<double, 20> kReproductiveTable = {
    0.0,  0.0015, 0.002, 0.005, 0.02, 0.05, 0.085, 0.105, 0.13,  0.135,
    0.12, 0.1,    0.075, 0.06,  0.04, 0.03, 0.02,  0.014, 0.0065, 0.001};

/// Days 0..199, each decade carrying a tenth of its table mass. The terminal
/// day 200 is added with zero mass so the normal attribute has a base.
inline DiscreteDist reproductive_days(bool with_terminal = true) {
  std::vector<Atom> atoms;
  for (int k = 0; k < 200; ++k) atoms.push_back({double(k), kReproductiveTable[k / 10] / 10.0});
  if (with_terminal) atoms.push_back({200.0, 0.0});
  return DiscreteDist(std::move(atoms));
}

inline fuzzy::FuzzyAttribute early() {
  return {"early", fuzzy::MembershipFunction({{0, 1}, {40, 1}, {100, 0}, {200, 0}})};
}
inline fuzzy::FuzzyAttribute normal() {
  return {"normal", fuzzy::MembershipFunction({{0, 0}, {80, 1}, {120, 1}, {200, 0}})};
}
inline fuzzy::FuzzyAttribute late() {
  return {"late", fuzzy::MembershipFunction({{0, 0}, {100, 0}, {160, 1}, {200, 1}})};
}

struct ReproductiveDays {
  selection::SelectionModel model;
  selection::AttributeBinding early;
  selection::AttributeBinding normal;
  selection::AttributeBinding late;
};

inline ReproductiveDays reproductive_example(fuzzy::TNorm t = fuzzy::TNorm::min()) {
  selection::SelectionModel m;
  m.kind = selection::ModelKind::SimpleFuzzy;
  m.tnorm = t;
  const DiscreteDist days = reproductive_days();
  return ReproductiveDays{m, selection::AttributeBinding(m, testing::early(), 100, days),
                   selection::AttributeBinding(m, testing::normal(), 200, days),
                   selection::AttributeBinding(m, testing::late(), 100, days)};
}

/// Uniform dose 0..9 with low / medium / high vanishing at 4.5 and the ends.
inline causal::TreatmentSpace dose_space() {
  std::vector<double> ts;
  for (int t = 0; t < 10; ++t) ts.push_back(t);
  selection::SelectionModel m;
  return causal::TreatmentSpace(DiscreteDist::uniform(ts), m,
                                {"low", fuzzy::MembershipFunction({{0, 1}, {4.5, 0}, {9, 0}})}, 9,
                                {"medium", fuzzy::MembershipFunction({{0, 0}, {4.5, 1}, {9, 0}})}, 0,
                                {"high", fuzzy::MembershipFunction({{0, 0}, {4.5, 0}, {9, 1}})}, 0);
}

inline causal::PotentialOutcomeModel dose_outcome() {
  std::map<double, double> p;
  for (int t = 0; t < 10; ++t) p[t] = t / 9.0;
  return causal::PotentialOutcomeModel(p);
}

inline const std::array<fuzzy::TNorm, 6>& catalogue() {
  static const std::array<fuzzy::TNorm, 6> all = {fuzzy::TNorm::min(),          fuzzy::TNorm::product(),
                                                  fuzzy::TNorm::lukasiewicz(),  fuzzy::TNorm::drastic(),
                                                  fuzzy::TNorm::nilpotent_min(), fuzzy::TNorm::hamacher_product()};
  return all;
}

/// Random pmf over 0..n-1 with every mass at least `floor`.
inline DiscreteDist random_pmf(std::mt19937_64& rng, int n, double floor = 0.01) {
  std::uniform_real_distribution<double> u(floor, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) total += (v = u(rng));
  std::vector<Atom> atoms;
  double used = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p = i + 1 == n ? 1.0 - used : w[i] / total;
    used += p;
    atoms.push_back({double(i), p});
  }
  return DiscreteDist(std::move(atoms));
}

/// Membership with a breakpoint at each of 0..n-1, so the degree at an
/// integer is exactly the drawn value. `zero_at` gets degree 0.
inline fuzzy::FuzzyAttribute random_attribute(std::mt19937_64& rng, const char* name, int n, int zero_at,
                                              double lo = 0.05, double hi = 0.95) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<fuzzy::Breakpoint> bps;
  for (int i = 0; i < n; ++i) bps.push_back({double(i), i == zero_at ? 0.0 : u(rng)});
  return {name, fuzzy::MembershipFunction(std::move(bps))};
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace pflc::testing
