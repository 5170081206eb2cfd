#pragma once

#include <span>
#include <vector>

#include "pflc/discrete_dist.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::discrete {

using selection::AttributeBinding;
using selection::SelectionModel;

/// xi_{x,A}: x with probability P(x is A), x_A otherwise. For x = x_A this is
/// the point mass at x_A.
struct XiPointDist {
  double x = 0.0;
  double base = 0.0;
  double p = 0.0;

  bool degenerate() const noexcept { return x == base; }
  double expectation() const noexcept { return base + (x - base) * p; }
  DiscreteDist pmf() const;
};

/// xi_{X,A}: the outcome of drawing x from the space and then selecting it as
/// A or selecting nothing (reported as x_A).
struct XiDist {
  double base = 0.0;
  double prob_selected = 0.0;  // P(Omega is A)
  DiscreteDist pmf;

  double prob_nothing() const noexcept { return pmf.prob_at(base); }
};

/// P(Omega is A) = sum over x of P(x is A) P(X = x).
double prob_omega_is(const SelectionModel& model, const AttributeBinding& binding);

XiPointDist xi_point(const SelectionModel& model, const AttributeBinding& binding, double x);

XiDist xi_dist(const SelectionModel& model, const AttributeBinding& binding);

/// E(xi_{X,A}) = x_A + sum over x of (x - x_A) P(x is A) P(X = x).
double expect_xi(const SelectionModel& model, const AttributeBinding& binding);

/// z0 + sum (z - z0) p(z). Equal to the plain mean of a pmf for every z0.
double shifted_conditional_expectation(std::span<const double> values, std::span<const double> probs, double z0);
double shifted_conditional_expectation(const DiscreteDist& dist, double z0);

/// Zadeh's probability of the fuzzy event: sum of mu_A(x) P(X = x).
double zadeh_prob(const AttributeBinding& binding);
/// Zadeh's mean of the fuzzy event. Throws ZeroProbabilityEvent when
/// zadeh_prob is 0.
double zadeh_mean(const AttributeBinding& binding);

}  // namespace pflc::discrete
