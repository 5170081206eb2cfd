#pragma once

#include <string_view>
#include <vector>

#include "pflc/discrete/joint_spec.hpp"
#include "pflc/discrete_dist.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::discrete {

/// A conditional pmf together with its expectation anchored at `base`
/// (x_A or y_B), computed by shifted_conditional_expectation.
struct CondResult {
  DiscreteDist pmf;
  double base = 0.0;
  double expectation = 0.0;
};

enum class Block { A, B, C, D, E, F, G, H, I };

std::string_view to_string(Block block) noexcept;
/// Accepts "a".."i" in either case.
Block parse_block(std::string_view name);

/// Conditional distributions built from the draws X, Y and the selections of
/// their values as A and B.
///
/// Notation: X ranges over the space of `bindA` (base x_A), Y over the space
/// of `bindB` (base y_B). The primitives below fully describe the generative
/// model; every block is an exact Bayes/total-law rearrangement of them, so a
/// direct enumeration of the same primitives must agree with each block.
class ConditionalSuite {
 public:
  ConditionalSuite(selection::SelectionModel model, selection::AttributeBinding bindA,
                   selection::AttributeBinding bindB, JointSpec joint = {});

  const selection::SelectionModel& model() const noexcept { return model_; }
  const selection::AttributeBinding& bind_a() const noexcept { return bindA_; }
  const selection::AttributeBinding& bind_b() const noexcept { return bindB_; }
  const JointSpec& joint() const noexcept { return joint_; }
  double x_base() const noexcept { return bindA_.base(); }
  double y_base() const noexcept { return bindB_.base(); }

  // Primitives.
  double px(double x) const;
  double py(double y) const;
  /// P(X = x, Y = y).
  double pxy(double x, double y) const;
  /// P(x is A), P(y is B) under the model.
  double sel_a(double x) const;
  double sel_b(double y) const;
  /// P(x is A | X = x, Y = y).
  double a(double x, double y) const;
  /// P(y is B | X = x).
  double bx(double x, double y) const;
  /// P(y is B | (x is A) & X = x & Y = y); 0 when a(x, y) = 0.
  double c1(double x, double y) const;
  /// P(y is B | not(x is A) & X = x & Y = y); 0 when a(x, y) = 1.
  double c0(double x, double y) const;

  /// (a) xi_{y,B} given X = alpha.
  CondResult block_a(double y, double alpha) const;
  /// (b) X given xi_{y,B} = beta.
  CondResult block_b(double y, double beta) const;
  /// (c) xi_{X,A} given Y = beta.
  CondResult block_c(double beta) const;
  /// (d) xi_{y,B} given xi_{x,A} = alpha.
  CondResult block_d(double x, double y, double alpha) const;
  /// (e) Y given xi_{X,A} = alpha.
  CondResult block_e(double alpha) const;
  /// (f) X given xi_{X,A} = alpha.
  CondResult block_f(double alpha) const;
  /// (g) xi_{Y,B} given xi_{x,A} = alpha; Y is drawn from its marginal.
  CondResult block_g(double x, double alpha) const;
  /// (h) xi_{y,B} given xi_{X,A} = alpha.
  CondResult block_h(double y, double alpha) const;
  /// (i) xi_{Y,B} given xi_{X,A} = alpha, weighted per
  /// JointSpec::total_law_weighting.
  CondResult block_i(double alpha) const;

  /// P(Omega is A) under the joint: sum of a(x, y) P(X = x, Y = y).
  double prob_omega_is_joint() const;

 private:
  void check_tables() const;
  double lookup(const std::optional<PairTable>& table, bool independent, double x, double y,
                const char* name) const;
  void require_x(double x) const;
  void require_y(double y) const;
  double std_arg(double x, double y) const;

  selection::SelectionModel model_;
  selection::AttributeBinding bindA_;
  selection::AttributeBinding bindB_;
  JointSpec joint_;
  std::vector<double> selA_;
  std::vector<double> selB_;
};

}  // namespace pflc::discrete
