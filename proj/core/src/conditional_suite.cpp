#include "pflc/discrete/conditional_suite.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "pflc/discrete/xi.hpp"
#include "pflc/error.hpp"
#include "pflc/selection/conditional.hpp"

namespace pflc::discrete {
namespace {

constexpr double kTol = 1e-12;

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string pair_text(double x, double y) { return "(" + describe(x) + ", " + describe(y) + ")"; }

CondResult finish(DiscreteDist pmf, double base) {
  const double e = shifted_conditional_expectation(pmf, base);
  return CondResult{std::move(pmf), base, e};
}

double checked_unit(double v, const std::string& what) {
  if (v < -kTol || v > 1.0 + kTol) raise(ErrorCode::InconsistentJoint, what + " = " + describe(v) + " leaves [0,1]");
  return std::clamp(v, 0.0, 1.0);
}

DiscreteDist two_point(double value, double p, double base) {
  if (value == base) return DiscreteDist::point(base);
  p = std::clamp(p, 0.0, 1.0);
  return DiscreteDist({{value, p}, {base, 1.0 - p}});
}

// Masses for every non-base value; the base takes the remainder.
DiscreteDist with_complement(std::vector<Atom> atoms, double base, const char* what) {
  double total = 0.0;
  for (const Atom& a : atoms) total += a.prob;
  const double rest = checked_unit(1.0 - total, std::string("mass at the base of ") + what);
  atoms.push_back({base, rest});
  return DiscreteDist(std::move(atoms));
}

DiscreteDist normalised(std::vector<Atom> atoms, const char* what) {
  double total = 0.0;
  for (const Atom& a : atoms) total += a.prob;
  if (!(total > 0.0)) raise(ErrorCode::ConditionImpossible, std::string("conditioning event of ") + what + " has probability 0");
  for (Atom& a : atoms) a.prob /= total;
  return DiscreteDist(std::move(atoms));
}

}  // namespace

std::string_view to_string(Block block) noexcept {
  static constexpr std::string_view names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  return names[static_cast<int>(block)];
}

Block parse_block(std::string_view name) {
  if (name.size() == 1) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    if (c >= 'a' && c <= 'i') return static_cast<Block>(c - 'a');
  }
  raise(ErrorCode::ParseError, "unknown conditional block '" + std::string(name) + "' (expected a..i)");
}

ConditionalSuite::ConditionalSuite(selection::SelectionModel model, selection::AttributeBinding bindA,
                                   selection::AttributeBinding bindB, JointSpec joint)
    : model_(std::move(model)), bindA_(std::move(bindA)), bindB_(std::move(bindB)), joint_(std::move(joint)) {
  joint_.validate();
  selA_ = selection::select_vector(model_, bindA_);
  selB_ = selection::select_vector(model_, bindB_);
  check_tables();
}

void ConditionalSuite::check_tables() const {
  auto keys_in_spaces = [&](const std::optional<PairTable>& t, const char* name) {
    if (!t) return;
    for (const auto& [key, v] : t->cells()) {
      if (!bindA_.space().contains(key.first) || !bindB_.space().contains(key.second)) {
        raise(ErrorCode::ValueNotInSpace, std::string("table '") + name + "' key " + pair_text(key.first, key.second) +
                                              " is outside the spaces");
      }
    }
  };
  keys_in_spaces(joint_.joint_xy, "joint_xy");
  keys_in_spaces(joint_.sel_a, "sel_a");
  keys_in_spaces(joint_.sel_b, "sel_b");
  keys_in_spaces(joint_.cond_b_given_a, "cond_b_given_a");
  keys_in_spaces(joint_.cond_b_given_not_a, "cond_b_given_not_a");

  if (joint_.joint_xy) {
    double total = 0.0;
    std::vector<double> mx(bindA_.space().size(), 0.0), my(bindB_.space().size(), 0.0);
    for (const auto& [key, v] : joint_.joint_xy->cells()) {
      total += v;
      mx[*bindA_.space().index_of(key.first)] += v;
      my[*bindB_.space().index_of(key.second)] += v;
    }
    if (std::abs(total - 1.0) > kTol) raise(ErrorCode::InconsistentJoint, "joint_xy sums to " + describe(total));
    const auto ax = bindA_.space().atoms();
    const auto ay = bindB_.space().atoms();
    for (std::size_t i = 0; i < ax.size(); ++i)
      if (std::abs(mx[i] - ax[i].prob) > kTol)
        raise(ErrorCode::InconsistentJoint, "joint_xy marginal of X at " + describe(ax[i].value) + " disagrees");
    for (std::size_t j = 0; j < ay.size(); ++j)
      if (std::abs(my[j] - ay[j].prob) > kTol)
        raise(ErrorCode::InconsistentJoint, "joint_xy marginal of Y at " + describe(ay[j].value) + " disagrees");
  }
  if (joint_.sel_a) {
    for (const auto& [key, v] : joint_.sel_a->cells())
      if (key.first == x_base() && v != 0.0)
        raise(ErrorCode::InconsistentJoint, "sel_a must vanish at the base element of " + bindA_.name());
  }
  for (const auto* t : {&joint_.sel_b, &joint_.cond_b_given_a, &joint_.cond_b_given_not_a}) {
    if (!*t) continue;
    for (const auto& [key, v] : (*t)->cells())
      if (key.second == y_base() && v != 0.0)
        raise(ErrorCode::InconsistentJoint, "selection of B must vanish at the base element of " + bindB_.name());
  }
}

double ConditionalSuite::lookup(const std::optional<PairTable>& table, bool independent, double x, double y,
                                const char* name) const {
  if (!table) {
    raise(ErrorCode::UnresolvedJoint, std::string("'") + name + "' is needed but neither assumed independent" +
                                          (independent ? "" : " nor supplied as a table"));
  }
  auto v = table->find(x, y);
  if (!v) raise(ErrorCode::UnresolvedJoint, std::string("table '") + name + "' has no entry for " + pair_text(x, y));
  return *v;
}

void ConditionalSuite::require_x(double x) const {
  if (!bindA_.space().contains(x))
    raise(ErrorCode::ValueNotInSpace, describe(x) + " is not a value of the space of " + bindA_.name());
}

void ConditionalSuite::require_y(double y) const {
  if (!bindB_.space().contains(y))
    raise(ErrorCode::ValueNotInSpace, describe(y) + " is not a value of the space of " + bindB_.name());
}

double ConditionalSuite::px(double x) const {
  require_x(x);
  return bindA_.space().prob_at(x);
}

double ConditionalSuite::py(double y) const {
  require_y(y);
  return bindB_.space().prob_at(y);
}

double ConditionalSuite::pxy(double x, double y) const {
  if (joint_.xy_independent) return px(x) * py(y);
  require_x(x);
  require_y(y);
  if (!joint_.joint_xy) raise(ErrorCode::UnresolvedJoint, "X and Y are not independent and no joint table is given");
  return joint_.joint_xy->find(x, y).value_or(0.0);
}

double ConditionalSuite::sel_a(double x) const {
  require_x(x);
  return selA_[*bindA_.space().index_of(x)];
}

double ConditionalSuite::sel_b(double y) const {
  require_y(y);
  return selB_[*bindB_.space().index_of(y)];
}

double ConditionalSuite::a(double x, double y) const {
  if (x == x_base()) return 0.0;
  if (joint_.sel_a_independent_of_y) return sel_a(x);
  return lookup(joint_.sel_a, false, x, y, "sel_a");
}

double ConditionalSuite::bx(double x, double y) const {
  if (y == y_base()) return 0.0;
  if (joint_.sel_b_independent_of_x) return sel_b(y);
  return lookup(joint_.sel_b, false, x, y, "sel_b");
}

double ConditionalSuite::std_arg(double x, double y) const {
  switch (model_.kind) {
    case selection::ModelKind::GeneralizedStandard:
    case selection::ModelKind::RandomGeneralizedStandard:
      return selection::conditional_argument(model_, bindB_, y, bindA_, x);
    default:
      return sel_b(y);
  }
}

double ConditionalSuite::c1(double x, double y) const {
  if (y == y_base()) return 0.0;
  if (a(x, y) == 0.0) return 0.0;
  if (!joint_.standard_conditional) return lookup(joint_.cond_b_given_a, false, x, y, "cond_b_given_a");
  const double pA = sel_a(x);
  if (!(pA > 0.0)) raise(ErrorCode::ConditionImpossible, "P(" + describe(x) + " is " + bindA_.name() + ") = 0");
  return std::min(1.0, model_.tnorm(std_arg(x, y), pA) / pA);
}

double ConditionalSuite::c0(double x, double y) const {
  if (y == y_base()) return 0.0;
  const double av = a(x, y);
  if (av >= 1.0) return 0.0;
  if (joint_.cond_b_given_not_a) return lookup(joint_.cond_b_given_not_a, false, x, y, "cond_b_given_not_a");
  if (joint_.sel_a_independent_of_y && joint_.standard_conditional) {
    const double pA = sel_a(x);
    return checked_unit((sel_b(y) - model_.tnorm(std_arg(x, y), pA)) / (1.0 - pA),
                        "P(y is B | not(x is A)) at " + pair_text(x, y));
  }
  return checked_unit((sel_b(y) - c1(x, y) * av) / (1.0 - av), "P(y is B | not(x is A)) at " + pair_text(x, y));
}

double ConditionalSuite::prob_omega_is_joint() const {
  double total = 0.0;
  for (const Atom& ax : bindA_.space().atoms())
    for (const Atom& ay : bindB_.space().atoms()) total += a(ax.value, ay.value) * pxy(ax.value, ay.value);
  return total;
}

CondResult ConditionalSuite::block_a(double y, double alpha) const {
  require_y(y);
  if (!(px(alpha) > 0.0)) raise(ErrorCode::ConditionImpossible, "P(X = " + describe(alpha) + ") = 0");
  return finish(two_point(y, bx(alpha, y), y_base()), y_base());
}

CondResult ConditionalSuite::block_b(double y, double beta) const {
  require_y(y);
  if (beta != y && beta != y_base())
    raise(ErrorCode::ConditionImpossible, describe(beta) + " is not a value of xi_{y,B}");
  const bool selected = beta == y && y != y_base();
  std::vector<Atom> atoms;
  for (const Atom& ax : bindA_.space().atoms()) {
    const double b = bx(ax.value, y);
    atoms.push_back({ax.value, (selected ? b : 1.0 - b) * ax.prob});
  }
  return finish(normalised(std::move(atoms), "block b"), x_base());
}

CondResult ConditionalSuite::block_c(double beta) const {
  const double pyb = py(beta);
  if (!(pyb > 0.0)) raise(ErrorCode::ConditionImpossible, "P(Y = " + describe(beta) + ") = 0");
  std::vector<Atom> atoms;
  for (const Atom& ax : bindA_.space().atoms()) {
    if (ax.value == x_base()) continue;
    atoms.push_back({ax.value, a(ax.value, beta) * (pxy(ax.value, beta) / pyb)});
  }
  return finish(with_complement(std::move(atoms), x_base(), "block c"), x_base());
}

CondResult ConditionalSuite::block_d(double x, double y, double alpha) const {
  require_x(x);
  require_y(y);
  double p = 0.0;
  if (alpha == x && x != x_base()) {
    if (!(a(x, y) > 0.0)) raise(ErrorCode::ConditionImpossible, "P(" + describe(x) + " is " + bindA_.name() + ") = 0");
    p = c1(x, y);
  } else if (alpha == x_base()) {
    if (!(a(x, y) < 1.0))
      raise(ErrorCode::ConditionImpossible, "P(not(" + describe(x) + " is " + bindA_.name() + ")) = 0");
    p = c0(x, y);
  } else {
    raise(ErrorCode::ConditionImpossible, describe(alpha) + " is not a value of xi_{x,A}");
  }
  return finish(two_point(y, p, y_base()), y_base());
}

CondResult ConditionalSuite::block_e(double alpha) const {
  require_x(alpha);
  std::vector<Atom> atoms;
  for (const Atom& ay : bindB_.space().atoms()) {
    double w = 0.0;
    if (alpha != x_base()) {
      w = a(alpha, ay.value) * pxy(alpha, ay.value);
    } else {
      for (const Atom& ax : bindA_.space().atoms())
        w += (1.0 - a(ax.value, ay.value)) * pxy(ax.value, ay.value);
    }
    atoms.push_back({ay.value, w});
  }
  return finish(normalised(std::move(atoms), "block e"), y_base());
}

CondResult ConditionalSuite::block_f(double alpha) const {
  require_x(alpha);
  std::vector<Atom> atoms;
  if (alpha != x_base()) {
    double mass = 0.0;
    for (const Atom& ay : bindB_.space().atoms()) mass += a(alpha, ay.value) * pxy(alpha, ay.value);
    if (!(mass > 0.0)) raise(ErrorCode::ConditionImpossible, "P(xi_{X,A} = " + describe(alpha) + ") = 0");
    for (const Atom& ax : bindA_.space().atoms()) atoms.push_back({ax.value, ax.value == alpha ? 1.0 : 0.0});
    return finish(DiscreteDist(std::move(atoms)), x_base());
  }
  for (const Atom& ax : bindA_.space().atoms()) {
    double w = 0.0;
    for (const Atom& ay : bindB_.space().atoms()) w += (1.0 - a(ax.value, ay.value)) * pxy(ax.value, ay.value);
    atoms.push_back({ax.value, w});
  }
  return finish(normalised(std::move(atoms), "block f"), x_base());
}

CondResult ConditionalSuite::block_g(double x, double alpha) const {
  require_x(x);
  const bool selected = alpha == x && x != x_base();
  if (!selected && alpha != x_base())
    raise(ErrorCode::ConditionImpossible, describe(alpha) + " is not a value of xi_{x,A}");
  double cond = 0.0;
  for (const Atom& ay : bindB_.space().atoms()) {
    const double av = a(x, ay.value);
    cond += (selected ? av : 1.0 - av) * ay.prob;
  }
  if (!(cond > 0.0)) raise(ErrorCode::ConditionImpossible, "P(xi_{x,A} = " + describe(alpha) + ") = 0");
  std::vector<Atom> atoms;
  for (const Atom& ay : bindB_.space().atoms()) {
    if (ay.value == y_base()) continue;
    const double av = a(x, ay.value);
    const double m = selected ? c1(x, ay.value) * av : c0(x, ay.value) * (1.0 - av);
    atoms.push_back({ay.value, m * ay.prob / cond});
  }
  return finish(with_complement(std::move(atoms), y_base(), "block g"), y_base());
}

CondResult ConditionalSuite::block_h(double y, double alpha) const {
  require_y(y);
  require_x(alpha);
  double p = 0.0;
  if (alpha != x_base()) {
    if (!(a(alpha, y) * px(alpha) > 0.0))
      raise(ErrorCode::ConditionImpossible, "P(xi_{X,A} = " + describe(alpha) + ") = 0");
    p = c1(alpha, y);
  } else {
    double num = 0.0, den = 0.0;
    for (const Atom& ax : bindA_.space().atoms()) {
      const double w = (1.0 - a(ax.value, y)) * ax.prob;
      den += w;
      if (w > 0.0) num += c0(ax.value, y) * w;
    }
    if (!(den > 0.0)) raise(ErrorCode::ConditionImpossible, "P(xi_{X,A} = x_A) = 0");
    p = checked_unit(num / den, "block h");
  }
  return finish(two_point(y, p, y_base()), y_base());
}

CondResult ConditionalSuite::block_i(double alpha) const {
  require_x(alpha);
  const auto xs = bindA_.space().atoms();
  const auto ys = bindB_.space().atoms();
  const bool selected = alpha != x_base();

  double cond = 0.0;
  if (selected) {
    for (const Atom& ay : ys) cond += a(alpha, ay.value) * pxy(alpha, ay.value);
  } else {
    for (const Atom& ax : xs)
      for (const Atom& ay : ys) cond += (1.0 - a(ax.value, ay.value)) * pxy(ax.value, ay.value);
  }
  if (!(cond > 0.0)) raise(ErrorCode::ConditionImpossible, "P(xi_{X,A} = " + describe(alpha) + ") = 0");

  std::vector<Atom> atoms;
  for (const Atom& ay : ys) {
    const double beta = ay.value;
    if (beta == y_base()) continue;
    double m = 0.0;
    if (selected) {
      if (joint_.total_law_weighting) {
        m = c1(alpha, beta) * a(alpha, beta) * pxy(alpha, beta) / cond;
      } else {
        m = c1(alpha, beta) * ay.prob;
      }
    } else {
      double g = 0.0;
      for (const Atom& ax : xs) {
        const double w = (1.0 - a(ax.value, beta)) * pxy(ax.value, beta);
        if (w > 0.0) g += c0(ax.value, beta) * w;
      }
      if (joint_.total_law_weighting) {
        m = g / cond;
      } else {
        // 1 - P(Omega is A | Y = beta), times P(Y = beta).
        double rest = 0.0;
        for (const Atom& ax : xs) rest += (1.0 - a(ax.value, beta)) * pxy(ax.value, beta);
        m = rest > 0.0 ? g * ay.prob / rest : 0.0;
      }
    }
    atoms.push_back({beta, m});
  }
  return finish(with_complement(std::move(atoms), y_base(), "block i"), y_base());
}

}  // namespace pflc::discrete
