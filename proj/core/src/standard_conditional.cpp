#include <algorithm>
#include <sstream>

#include "pflc/error.hpp"
#include "pflc/random/keyed_stream.hpp"
#include "pflc/selection/conditional.hpp"

namespace pflc::selection {
namespace {

constexpr double kCellTolerance = 1e-12;

double draw_scale(const SelectionModel& model, const AttributeBinding& bindB, double y,
                  const AttributeBinding& bindA, double x) {
  auto stream = random::KeyedStream::of({model.seed, random::hash_bytes(bindA.name()),
                                         random::hash_bytes(bindB.name()), random::key_of(x), random::key_of(y)});
  const double u = stream.next_unit();
  double cumulative = 0.0;
  const auto atoms = model.scale_dist->atoms();
  for (const Atom& a : atoms) {
    cumulative += a.prob;
    if (u < cumulative) return a.value;
  }
  // u fell in the rounding gap above the last cumulative sum.
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
    if (it->prob > 0.0) return it->value;
  return atoms.back().value;
}

}  // namespace

double standard_conditional(const fuzzy::TNorm& t, double pB, double pA) {
  if (!(pA > 0.0)) raise(ErrorCode::ConditionImpossible, "conditioning selection has probability 0");
  return std::min(1.0, t(pB, pA) / pA);
}

double standard_conditional_negated(const fuzzy::TNorm& t, double pB, double pA) {
  if (!(pA < 1.0)) raise(ErrorCode::ConditionImpossible, "negated conditioning selection has probability 0");
  const double v = (pB - t(pB, pA)) / (1.0 - pA);
  if (v < -kCellTolerance || v > 1.0 + kCellTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "P(y is B | not(x is A)) = " << v << " leaves [0,1]";
    raise(ErrorCode::InconsistentJoint, os.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

double conditional_argument(const SelectionModel& model, const AttributeBinding& bindB, double y,
                            const AttributeBinding& bindA, double x) {
  const double pB = select_prob(model, bindB, y);
  switch (model.kind) {
    case ModelKind::GeneralizedStandard:
      return std::clamp(model.scale * pB, 0.0, 1.0);
    case ModelKind::RandomGeneralizedStandard:
      return std::clamp(draw_scale(model, bindB, y, bindA, x) * pB, 0.0, 1.0);
    default:
      return pB;
  }
}

double std_cond_prob(const SelectionModel& model, const AttributeBinding& bindB, double y,
                     const AttributeBinding& bindA, double x) {
  const double pA = select_prob(model, bindA, x);
  if (!(pA > 0.0)) raise(ErrorCode::ConditionImpossible, "P(x is " + bindA.name() + ") = 0");
  const double arg = conditional_argument(model, bindB, y, bindA, x);
  return std::min(1.0, model.tnorm(arg, pA) / pA);
}

double std_cond_prob_negated(const SelectionModel& model, const AttributeBinding& bindB, double y,
                             const AttributeBinding& bindA, double x) {
  const double pA = select_prob(model, bindA, x);
  if (!(pA < 1.0)) raise(ErrorCode::ConditionImpossible, "P(not(x is " + bindA.name() + ")) = 0");
  const double pB = select_prob(model, bindB, y);
  const double arg = conditional_argument(model, bindB, y, bindA, x);
  // P(y is B | x is A) P(x is A) = T(arg, pA); written without the division
  // so pA = 0 needs no special case.
  const double v = (pB - model.tnorm(arg, pA)) / (1.0 - pA);
  if (v < -kCellTolerance || v > 1.0 + kCellTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "P(" << bindB.name() << " | not " << bindA.name() << ") = " << v << " leaves [0,1]";
    raise(ErrorCode::InconsistentJoint, os.str());
  }
  return std::clamp(v, 0.0, 1.0);
}

double std_cond_prob_multi(const SelectionModel& model, std::span<const SelectionTerm> numerator,
                           std::span<const SelectionTerm> denominator) {
  std::vector<double> den;
  den.reserve(denominator.size());
  for (const auto& term : denominator) den.push_back(select_prob(model, *term.binding, term.value));
  const double den_fold = model.tnorm.fold(den);
  if (!(den_fold > 0.0)) raise(ErrorCode::ConditionImpossible, "conjunction of conditions has probability 0");

  std::vector<double> all;
  all.reserve(numerator.size() + den.size());
  for (const auto& term : numerator) all.push_back(select_prob(model, *term.binding, term.value));
  all.insert(all.end(), den.begin(), den.end());
  return std::min(1.0, model.tnorm.fold(all) / den_fold);
}

XiJointTable xi_joint_from_probs(const fuzzy::TNorm& t, double pA, double pB, double arg) {
  XiJointTable table;
  const double both = t(arg, pA);
  double cells[4] = {both, pB - both, pA - both, 0.0};
  cells[3] = (1.0 - pB) - cells[2];
  for (double& c : cells) {
    if (c < -kCellTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "joint cell " << c << " is negative (P_A=" << pA << ", P_B=" << pB << ", T=" << t.label() << ")";
      raise(ErrorCode::InconsistentJoint, os.str());
    }
    c = std::max(0.0, c);
  }
  table.cells = {{{cells[0], cells[2]}, {cells[1], cells[3]}}};
  return table;
}

XiJointTable joint_xi_table(const SelectionModel& model, const AttributeBinding& bindA, double x,
                            const AttributeBinding& bindB, double y) {
  const double pA = select_prob(model, bindA, x);
  const double pB = select_prob(model, bindB, y);
  const double arg = conditional_argument(model, bindB, y, bindA, x);
  XiJointTable table = xi_joint_from_probs(model.tnorm, pA, pB, arg);
  table.x = x;
  table.x_base = bindA.base();
  table.y = y;
  table.y_base = bindB.base();
  return table;
}

double classic_prob_based_nonstandard(const fuzzy::TNorm& t, double muB, double muA, double prob_y_given_x) {
  if (!(muA > 0.0)) raise(ErrorCode::ConditionImpossible, "mu_A(x) = 0");
  return t(muB, muA) / muA * prob_y_given_x;
}

}  // namespace pflc::selection
