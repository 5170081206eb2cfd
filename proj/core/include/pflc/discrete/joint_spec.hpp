#pragma once

#include <map>
#include <optional>
#include <utility>

#include "pflc/discrete_dist.hpp"

namespace pflc::discrete {

/// Sparse table over pairs (x, y). Lookups of absent keys are reported by
/// returning std::nullopt so callers can decide between 0 and UnresolvedJoint.
class PairTable {
 public:
  PairTable() = default;

  void set(double x, double y, double value) { cells_[{x, y}] = value; }
  std::optional<double> find(double x, double y) const;
  std::size_t size() const noexcept { return cells_.size(); }
  const std::map<std::pair<double, double>, double>& cells() const noexcept { return cells_; }

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  std::map<std::pair<double, double>, double> cells_;
};

/// Which independence assumptions hold between the value draws and the
/// selections, plus the tables that replace an assumption that is switched
/// off. A flag set to false must come with its table.
struct JointSpec {
  /// X and Y independent; otherwise `joint_xy` holds P(X = x, Y = y).
  bool xy_independent = true;
  std::optional<PairTable> joint_xy;

  /// Selection of x as A independent of Y given X; otherwise `sel_a` holds
  /// P(x is A | X = x, Y = y).
  bool sel_a_independent_of_y = true;
  std::optional<PairTable> sel_a;

  /// Selection of y as B independent of X; otherwise `sel_b` holds
  /// P(y is B | X = x) keyed by (x, y).
  bool sel_b_independent_of_x = true;
  std::optional<PairTable> sel_b;

  /// Selection of y as B given (x is A) & X = x & Y = y follows the model's
  /// standard conditional; otherwise `cond_b_given_a` supplies it.
  bool standard_conditional = true;
  std::optional<PairTable> cond_b_given_a;
  /// Optional P(y is B | not(x is A) & X = x & Y = y). When absent it is
  /// derived by Bayes from P(y is B), P(x is A | ...) and the conditional
  /// given (x is A).
  std::optional<PairTable> cond_b_given_not_a;

  /// Block (i) weighting: false uses P(Y = beta) as printed, true uses the
  /// total-law weight P(Y = beta | xi_{X,A} = alpha).
  bool total_law_weighting = false;

  /// Flag/table consistency only; value checks need the spaces and happen in
  /// ConditionalSuite.
  void validate() const;

  friend bool operator==(const JointSpec&, const JointSpec&) = default;
};

}  // namespace pflc::discrete
