#include "pflc/discrete/xi.hpp"

#include "pflc/error.hpp"

namespace pflc::discrete {

DiscreteDist XiPointDist::pmf() const {
  if (degenerate()) return DiscreteDist::point(base);
  return DiscreteDist({{x, p}, {base, 1.0 - p}});
}

double prob_omega_is(const SelectionModel& model, const AttributeBinding& binding) {
  const auto probs = selection::select_vector(model, binding);
  const auto atoms = binding.space().atoms();
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) total += probs[i] * atoms[i].prob;
  return total;
}

XiPointDist xi_point(const SelectionModel& model, const AttributeBinding& binding, double x) {
  const double p = selection::select_prob(model, binding, x);
  return XiPointDist{x, binding.base(), x == binding.base() ? 0.0 : p};
}

XiDist xi_dist(const SelectionModel& model, const AttributeBinding& binding) {
  const auto probs = selection::select_vector(model, binding);
  const auto atoms = binding.space().atoms();
  std::vector<Atom> out;
  out.reserve(atoms.size());
  double selected = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double mass = probs[i] * atoms[i].prob;
    selected += mass;
    if (atoms[i].value != binding.base()) out.push_back({atoms[i].value, mass});
  }
  out.push_back({binding.base(), 1.0 - selected});
  return XiDist{binding.base(), selected, DiscreteDist(std::move(out))};
}

double expect_xi(const SelectionModel& model, const AttributeBinding& binding) {
  const auto probs = selection::select_vector(model, binding);
  const auto atoms = binding.space().atoms();
  const double base = binding.base();
  double shift = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) shift += (atoms[i].value - base) * probs[i] * atoms[i].prob;
  return base + shift;
}

double shifted_conditional_expectation(std::span<const double> values, std::span<const double> probs, double z0) {
  if (values.size() != probs.size()) raise(ErrorCode::ValidationError, "values and probabilities differ in length");
  double shift = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) shift += (values[i] - z0) * probs[i];
  return z0 + shift;
}

double shifted_conditional_expectation(const DiscreteDist& dist, double z0) {
  double shift = 0.0;
  for (const Atom& a : dist.atoms()) shift += (a.value - z0) * a.prob;
  return z0 + shift;
}

double zadeh_prob(const AttributeBinding& binding) {
  double total = 0.0;
  for (const Atom& a : binding.space().atoms()) total += binding.attr().degree(a.value) * a.prob;
  return total;
}

double zadeh_mean(const AttributeBinding& binding) {
  const double p = zadeh_prob(binding);
  if (!(p > 0.0)) raise(ErrorCode::ZeroProbabilityEvent, "fuzzy event '" + binding.name() + "' has probability 0");
  double moment = 0.0;
  for (const Atom& a : binding.space().atoms()) moment += a.value * binding.attr().degree(a.value) * a.prob;
  return moment / p;
}

}  // namespace pflc::discrete
