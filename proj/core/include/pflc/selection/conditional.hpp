#pragma once

#include <array>
#include <span>

#include "pflc/fuzzy/tnorm.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::selection {

/// T(pB, pA) / pA. Throws ConditionImpossible when pA = 0.
double standard_conditional(const fuzzy::TNorm& t, double pB, double pA);

/// (pB - T(pB, pA)) / (1 - pA), the Bayes complement of standard_conditional.
/// Throws ConditionImpossible when pA = 1 and InconsistentJoint when the
/// value leaves [0,1].
double standard_conditional_negated(const fuzzy::TNorm& t, double pB, double pA);

/// First t-norm argument the model uses for P(y is B | x is A): P(y is B)
/// itself for plain standard models, clamp(r * P(y is B), 0, 1) for the
/// generalized ones. The random variant draws r from the model's scale pmf
/// with a stream keyed on (seed, A, B, x, y).
double conditional_argument(const SelectionModel& model, const AttributeBinding& bindB, double y,
                            const AttributeBinding& bindA, double x);

/// P_T(y is B | x is A).
double std_cond_prob(const SelectionModel& model, const AttributeBinding& bindB, double y,
                     const AttributeBinding& bindA, double x);

/// P_T(y is B | not(x is A)).
double std_cond_prob_negated(const SelectionModel& model, const AttributeBinding& bindB, double y,
                             const AttributeBinding& bindA, double x);

struct SelectionTerm {
  const AttributeBinding* binding = nullptr;
  double value = 0.0;
};

/// T-fold of the numerator and denominator selection probabilities divided by
/// the T-fold of the denominator alone. Uses the plain selection
/// probabilities; the generalized scale only enters the binary conditional.
double std_cond_prob_multi(const SelectionModel& model, std::span<const SelectionTerm> numerator,
                           std::span<const SelectionTerm> denominator);

/// Joint pmf of (xi_{x,A}, xi_{y,B}) induced by the standard conditional.
/// cells[i][j]: i = 0 for xi_{x,A} = x, 1 for x_A; j = 0 for xi_{y,B} = y,
/// 1 for y_B.
struct XiJointTable {
  double x = 0.0, x_base = 0.0, y = 0.0, y_base = 0.0;
  std::array<std::array<double, 2>, 2> cells{};

  double row_sum(int i) const noexcept { return cells[i][0] + cells[i][1]; }
  double col_sum(int j) const noexcept { return cells[0][j] + cells[1][j]; }
};

/// Builds the table from P(x is A) = pA, P(y is B) = pB and the first t-norm
/// argument `arg` (pB for standard models). Throws InconsistentJoint when a
/// cell is below -1e-12.
XiJointTable xi_joint_from_probs(const fuzzy::TNorm& t, double pA, double pB, double arg);

XiJointTable joint_xi_table(const SelectionModel& model, const AttributeBinding& bindA, double x,
                            const AttributeBinding& bindB, double y);

/// Non-standard conditional of the classic-probability-based model:
/// T(mu_B(y), mu_A(x)) / mu_A(x) * P(Y = y | X = x), with the last factor
/// supplied by the caller from a joint of X and Y.
double classic_prob_based_nonstandard(const fuzzy::TNorm& t, double muB, double muA, double prob_y_given_x);

}  // namespace pflc::selection
