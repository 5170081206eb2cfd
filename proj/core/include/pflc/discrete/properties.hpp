#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pflc/discrete_dist.hpp"
#include "pflc/fuzzy/tnorm.hpp"

namespace pflc::discrete {

struct DiamondViolation {
  enum class Kind { NotAPmf, TotalLaw } kind = Kind::NotAPmf;
  double value = 0.0;     // y for NotAPmf, x for TotalLaw
  double observed = 0.0;  // conditional sum, or reconstructed P(X = x)
  double expected = 0.0;
};

struct DiamondReport {
  bool holds = false;
  /// Sum over x of T(P_X(x), P_Y(y)) / P_Y(y), per value y of Y.
  std::vector<double> conditional_sums;
  /// Total law applied to the raw candidate conditionals, per value x of X.
  std::vector<double> reconstructed;
  /// Total law applied after normalising each candidate conditional.
  std::vector<double> normalized_reconstructed;
  std::vector<DiamondViolation> violations;
};

/// Tests whether P(X = x | Y = y) = T(P_X(x), P_Y(y)) / P_Y(y) defines a
/// valid conditional distribution consistent with the marginal of X.
/// Requires P_Y(y) > 0 for every listed y.
DiamondReport check_diamond(const DiscreteDist& dist_x, const DiscreteDist& dist_y, const fuzzy::TNorm& t,
                            double tol = 1e-12);

/// Conditional pmfs of a target variable keyed by the conditioning value.
using ConditionalFamily = std::map<double, DiscreteDist>;

/// Golden Property check: every member of `cond` is a pmf, the total law over
/// `given` reproduces `target`, and for the conditioning values in `check_at`
/// (all members of `cond` when absent) every target value other than
/// `exempt` satisfies cond[g](v) = T(P_target(v), P_given(g)) / P_given(g).
bool check_golden(const ConditionalFamily& cond, const DiscreteDist& target, const DiscreteDist& given,
                  const fuzzy::TNorm& t, double exempt, const std::optional<std::vector<double>>& check_at = std::nullopt,
                  double tol = 1e-12);

/// The only family that can satisfy the Golden Property for (X | Y) with the
/// given exempt value: the t-norm formula everywhere else, with the exempt
/// value absorbing the remainder. std::nullopt when a remainder is negative.
std::optional<ConditionalFamily> golden_completion(const DiscreteDist& dist_x, const DiscreteDist& dist_y,
                                                   const fuzzy::TNorm& t, double exempt);

/// check_golden over golden_completion for every value of X; true when some
/// exempt value works.
bool golden_for_some_exempt(const DiscreteDist& dist_x, const DiscreteDist& dist_y, const fuzzy::TNorm& t,
                            double tol = 1e-12);

}  // namespace pflc::discrete
