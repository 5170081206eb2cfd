#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pflc/discrete/conditional_suite.hpp"
#include "pflc/discrete/xi.hpp"
#include "pflc/error.hpp"

namespace pflc::discrete {
namespace {

ConditionalSuite early_normal() {
  const auto ex = testing::reproductive_example();
  return ConditionalSuite(ex.model, ex.early, ex.normal);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::DomainError;
}

TEST(Suite, BlockGAtFiftySeven) {
  const auto s = early_normal();
  const auto r = s.block_g(57, 57);
  EXPECT_NEAR(r.pmf.prob_at(57), 0.00497093, 5e-9);
  EXPECT_NEAR(r.pmf.prob_at(57), 171.0 / 172.0 * 0.005, 1e-15);
  EXPECT_EQ(r.base, 200);
}

TEST(Suite, BlockDIsTheStandardConditional) {
  const auto s = early_normal();
  EXPECT_NEAR(s.block_d(57, 57, 57).pmf.prob_at(57), 171.0 / 172.0, 1e-12);
  const double pA = 43.0 / 60.0, pB = 57.0 / 80.0;
  EXPECT_NEAR(s.block_d(57, 57, 100).pmf.prob_at(57), (pB - std::min(pA, pB)) / (1 - pA), 1e-12);
  EXPECT_EQ(code_of([&] { s.block_d(57, 57, 58); }), ErrorCode::ConditionImpossible);
  EXPECT_EQ(code_of([&] { s.block_d(150, 57, 150); }), ErrorCode::ConditionImpossible);
}

TEST(Suite, BlockFAtSelectedValueIsIndicator) {
  const auto s = early_normal();
  const auto r = s.block_f(57);
  EXPECT_EQ(r.pmf.prob_at(57), 1.0);
  EXPECT_EQ(r.expectation, 57.0);
}

// Given nothing was selected, X is proportional to (1 - mu(x)) P(X = x).
TEST(Suite, BlockFAtBaseAgainstEnumeration) {
  const auto s = early_normal();
  const auto r = s.block_f(100);
  const double norm = 1.0 - prob_omega_is(s.model(), s.bind_a());
  EXPECT_NEAR(norm, 1.0 - 0.2057917, 5e-7);
  const auto days = testing::reproductive_days();
  for (const Atom& a : days.atoms()) {
    const double mu = testing::early().degree(a.value);
    EXPECT_NEAR(r.pmf.prob_at(a.value), (1.0 - mu) * a.prob / norm, 1e-12);
  }
}

TEST(Suite, BlockCIsXiGivenY) {
  const auto s = early_normal();
  const auto r = s.block_c(57);
  // Independence: xi_{X,A} does not care about Y.
  const auto d = xi_dist(s.model(), s.bind_a());
  for (const Atom& a : d.pmf.atoms()) EXPECT_NEAR(r.pmf.prob_at(a.value), a.prob, 1e-15);
}

TEST(Suite, BlockIPrintedAndTotalLawAgreeUnderIndependence) {
  const auto ex = testing::reproductive_example();
  JointSpec printed, total;
  total.total_law_weighting = true;
  const ConditionalSuite a(ex.model, ex.early, ex.normal, printed), b(ex.model, ex.early, ex.normal, total);
  for (double alpha : {10.0, 57.0, 100.0}) {
    const auto ra = a.block_i(alpha), rb = b.block_i(alpha);
    for (const Atom& at : ra.pmf.atoms()) EXPECT_NEAR(at.prob, rb.pmf.prob_at(at.value), 1e-12);
  }
}

TEST(Suite, BlocksCarryShiftedExpectations) {
  const auto s = early_normal();
  for (const auto& r : {s.block_a(57, 10), s.block_b(57, 57), s.block_e(57), s.block_g(57, 100), s.block_h(57, 100)}) {
    double direct = 0.0;
    for (const Atom& a : r.pmf.atoms()) direct += a.value * a.prob;
    EXPECT_NEAR(r.expectation, direct, 1e-9);
  }
}

TEST(Suite, MissingTablesAreUnresolved) {
  const auto ex = testing::reproductive_example();
  JointSpec js;
  js.xy_independent = false;
  const ConditionalSuite s(ex.model, ex.early, ex.normal, js);
  EXPECT_EQ(code_of([&] { s.block_c(57); }), ErrorCode::UnresolvedJoint);
  JointSpec nonstd;
  nonstd.standard_conditional = false;
  const ConditionalSuite t(ex.model, ex.early, ex.normal, nonstd);
  EXPECT_EQ(code_of([&] { t.block_d(57, 57, 57); }), ErrorCode::UnresolvedJoint);
}

TEST(Suite, TableGivenWithTrueFlagIsRejected) {
  JointSpec js;
  js.sel_a = PairTable{};
  EXPECT_EQ(code_of([&] { js.validate(); }), ErrorCode::ValidationError);
}

TEST(Suite, TableValuesChecked) {
  const auto ex = testing::reproductive_example();
  JointSpec js;
  js.sel_a_independent_of_y = false;
  PairTable t;
  t.set(100, 57, 0.5);  // base of A must never be selected
  js.sel_a = t;
  EXPECT_THROW(ConditionalSuite(ex.model, ex.early, ex.normal, js), Error);
  PairTable u;
  u.set(1000, 57, 0.5);
  js.sel_a = u;
  EXPECT_THROW(ConditionalSuite(ex.model, ex.early, ex.normal, js), Error);
}

TEST(Suite, JointProbabilityOfSelection) {
  const auto s = early_normal();
  EXPECT_NEAR(s.prob_omega_is_joint(), prob_omega_is(s.model(), s.bind_a()), 1e-12);
}

TEST(Suite, BlockNames) {
  EXPECT_EQ(parse_block("G"), Block::G);
  EXPECT_EQ(to_string(Block::I), "i");
  EXPECT_THROW(parse_block("j"), Error);
}

}  // namespace
}  // namespace pflc::discrete
