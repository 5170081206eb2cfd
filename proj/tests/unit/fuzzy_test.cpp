#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "pflc/error.hpp"
#include "pflc/fuzzy/membership.hpp"
#include "pflc/fuzzy/tnorm.hpp"

namespace pflc::fuzzy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Attributes on [0, 10] with zeros at 0, 5 and 10.
FuzzyAttribute low() { return {"low", MembershipFunction({{0, 1}, {5, 0}, {10, 0}})}; }
FuzzyAttribute medium() { return {"medium", MembershipFunction({{0, 0}, {5, 1}, {10, 0}})}; }
FuzzyAttribute high() { return {"high", MembershipFunction({{0, 0}, {5, 0}, {10, 1}})}; }

std::vector<TNorm> all_tnorms() {
  std::vector<TNorm> ts(testing::catalogue().begin(), testing::catalogue().end());
  for (double p : {0.0, 0.5, 1.0, 2.0, 7.0, 400.0, kInf}) ts.push_back(TNorm::aczel_alsina(p));
  for (double p : {-1.0, -0.5, 0.0, 1.0, 3.0, 1e6, kInf}) ts.push_back(TNorm::sugeno_weber(p));
  return ts;
}

TEST(Membership, FigureOneDegreesAtFour) {
  EXPECT_NEAR(low().degree(4), 0.2, 1e-15);
  EXPECT_NEAR(medium().degree(4), 0.8, 1e-15);
  EXPECT_EQ(high().degree(4), 0.0);
}

TEST(Membership, ZeroOutsideDomain) {
  EXPECT_EQ(low().degree(-0.5), 0.0);
  EXPECT_EQ(low().degree(10.5), 0.0);
  EXPECT_EQ(membership_eval(high(), 11), 0.0);
}

TEST(Membership, BreakpointsReturnStoredDegrees) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto attr = testing::random_attribute(rng, "a", 6, k % 6, 0.0, 1.0);
    for (const Breakpoint& b : attr.membership.breakpoints()) EXPECT_EQ(attr.degree(b.x), b.degree);
  }
}

TEST(Membership, LinearBetweenBreakpoints) {
  const MembershipFunction m({{0, 0}, {2, 1}, {4, 0.5}});
  EXPECT_DOUBLE_EQ(m(1), 0.5);
  EXPECT_DOUBLE_EQ(m(3), 0.75);
}

TEST(Membership, RejectsMalformedBreakpoints) {
  EXPECT_THROW(MembershipFunction({{0, 0}}), Error);
  EXPECT_THROW(MembershipFunction({{0, 0}, {0, 1}}), Error);
  EXPECT_THROW(MembershipFunction({{0, 0}, {1, 1.5}}), Error);
  EXPECT_THROW(MembershipFunction({{2, 0}, {1, 1}}), Error);
}

TEST(Membership, Complement) {
  const auto c = low().membership.complement();
  EXPECT_NEAR(c(4), 0.8, 1e-15);
  EXPECT_EQ(c(11), 0.0);
}

TEST(TNorm, CatalogueValues) {
  EXPECT_EQ(TNorm::min()(0.6, 0.7), 0.6);
  EXPECT_EQ(TNorm::lukasiewicz()(0.5, 0.4), 0.0);
  EXPECT_NEAR(TNorm::product()(0.5, 0.4), 0.2, 1e-16);
  EXPECT_EQ(TNorm::drastic()(0.5, 0.4), 0.0);
  EXPECT_EQ(TNorm::drastic()(1.0, 0.4), 0.4);
  EXPECT_EQ(TNorm::nilpotent_min()(0.5, 0.4), 0.0);
  EXPECT_EQ(TNorm::nilpotent_min()(0.7, 0.4), 0.4);
  EXPECT_NEAR(TNorm::hamacher_product()(0.5, 0.5), 0.25 / 0.75, 1e-16);
  EXPECT_EQ(TNorm::hamacher_product()(0.0, 0.0), 0.0);
}

TEST(TNorm, IdentityElementForEveryKind) {
  for (const TNorm& t : all_tnorms())
    for (double a : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) EXPECT_EQ(t(a, 1.0), a) << t.label();
}

TEST(TNorm, ConjunctionOfMemberships) {
  EXPECT_NEAR(tnorm_and_membership(TNorm::min(), low(), medium(), 4), 0.2, 1e-15);
  EXPECT_EQ(tnorm_and_membership(TNorm::product(), low(), high(), 4), 0.0);
  const auto l = low();
  for (double x : {0.0, 1.3, 4.0, 7.0}) EXPECT_EQ(tnorm_and_membership(TNorm::min(), l, l, x), l.degree(x));
}

TEST(TNorm, AxiomsOnStatedGrids) {
  for (const TNorm& t : all_tnorms()) {
    const auto r = check_tnorm_axioms(t);
    EXPECT_EQ(r.commutativity, 0.0) << t.label();
    EXPECT_EQ(r.identity, 0.0) << t.label();
    EXPECT_LE(r.associativity, 1e-12) << t.label();
    EXPECT_LE(r.monotonicity, 1e-12) << t.label();
    EXPECT_EQ(r.annihilator, 0.0) << t.label();
  }
}

TEST(TNorm, ParametricLimits) {
  const auto aa_inf = TNorm::aczel_alsina(kInf), aa_0 = TNorm::aczel_alsina(0.0);
  const auto sw_inf = TNorm::sugeno_weber(kInf), sw_m1 = TNorm::sugeno_weber(-1.0), sw_0 = TNorm::sugeno_weber(0.0);
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double a = i / 100.0, b = j / 100.0;
      EXPECT_LE(std::abs(aa_inf(a, b) - std::min(a, b)), 1e-9);
      EXPECT_LE(std::abs(aa_0(a, b) - TNorm::drastic()(a, b)), 1e-9);
      EXPECT_LE(std::abs(sw_inf(a, b) - a * b), 1e-9);
      EXPECT_LE(std::abs(sw_m1(a, b) - TNorm::drastic()(a, b)), 1e-9);
      EXPECT_LE(std::abs(sw_0(a, b) - TNorm::lukasiewicz()(a, b)), 1e-9);
    }
}

TEST(TNorm, AczelAlsinaConvergesToMinForLargeParameter) {
  const auto t = TNorm::aczel_alsina(1e4);
  EXPECT_NEAR(t(0.3, 0.8), 0.3, 1e-3);
  // Large parameters stay finite where a direct power would overflow.
  const auto huge = TNorm::aczel_alsina(1e300);
  EXPECT_NEAR(huge(0.3, 0.8), 0.3, 1e-9);
  EXPECT_EQ(TNorm::aczel_alsina(2.0)(0.0, 0.5), 0.0);
}

TEST(TNorm, DomainChecks) {
  EXPECT_THROW(TNorm::aczel_alsina(-0.1), Error);
  EXPECT_THROW(TNorm::sugeno_weber(-1.5), Error);
  EXPECT_THROW(TNorm::min()(1.2, 0.5), Error);
  EXPECT_THROW(TNorm::min()(0.5, -0.1), Error);
}

TEST(TNorm, FoldAndNames) {
  const std::vector<double> v{0.3, 0.5, 0.5};
  EXPECT_EQ(TNorm::min().fold(v), 0.3);
  EXPECT_EQ(TNorm::min().fold(std::span<const double>{}), 1.0);
  EXPECT_EQ(parse_tnorm_kind("hamacher_product"), TNormKind::HamacherProduct);
  EXPECT_THROW(parse_tnorm_kind("maximum"), Error);
  for (int k = 0; k <= static_cast<int>(TNormKind::SugenoWeber); ++k) {
    const auto kind = static_cast<TNormKind>(k);
    EXPECT_EQ(parse_tnorm_kind(to_string(kind)), kind);
  }
}

TEST(TNorm, RandomPointsStayInUnitSquareAndBelowMin) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const TNorm& t : all_tnorms())
    for (int k = 0; k < 2000; ++k) {
      const double a = u(rng), b = u(rng);
      const double v = t(a, b);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, std::min(a, b) + 1e-15) << t.label();
    }
}

}  // namespace
}  // namespace pflc::fuzzy
