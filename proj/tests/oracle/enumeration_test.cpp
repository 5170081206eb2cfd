#include <gtest/gtest.h>

#include "oracle_checks.hpp"

namespace pflc::testing::oracle {
namespace {

std::string flags(const Instance& in) {
  const auto& j = in.joint;
  return std::string("xy=") + (j.xy_independent ? "ind" : "tab") + " selA=" +
         (j.sel_a_independent_of_y ? "ind" : "tab") + " selB=" + (j.sel_b_independent_of_x ? "ind" : "tab") +
         " cond=" + (j.standard_conditional ? "std" : "tab") + (j.cond_b_given_not_a ? "+neg" : "") +
         " total_law=" + (j.total_law_weighting ? "1" : "0") + " t=" + in.t.label();
}

class RandomInstances : public ::testing::TestWithParam<int> {};

TEST_P(RandomInstances, EveryBlockMatchesEnumeration) {
  std::mt19937_64 rng(0x5eed0000u + GetParam());
  for (int k = 0; k < 25; ++k) {
    const Instance in = random_instance(rng);
    const auto bad = check_all_blocks(in);
    for (const auto& m : bad) ADD_FAILURE() << flags(in) << " block " << m.where << ": " << m.detail;
    if (!bad.empty()) return;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomInstances, ::testing::Range(0, 8));

TEST(EnumerationOracle, IndependentDefaultsOnly) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 40) {
    Instance in = random_instance(rng, 5);
    in.joint = discrete::JointSpec{};
    in.joint.total_law_weighting = checked % 2 == 0;
    // Without a table, P(B | not A) comes from Bayes and can leave [0,1]
    // (drastic and similar t-norms); the suite must refuse such instances.
    bool derivable = true;
    for (int i = 0; i < in.nx; ++i)
      for (int j = 0; j < in.ny; ++j) {
        const double c0 = in.C0(i, j);
        if (c0 < -1e-12 || c0 > 1.0 + 1e-12) {
          derivable = false;
          try {
            (void)in.suite().c0(i, j);
            ADD_FAILURE() << flags(in) << " c0 " << i << " " << j << " = " << c0 << " accepted";
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InconsistentJoint);
          }
        }
      }
    if (!derivable) continue;
    const auto bad = check_all_blocks(in);
    for (const auto& m : bad) ADD_FAILURE() << flags(in) << " block " << m.where << ": " << m.detail;
    ++checked;
  }
}

TEST(EnumerationOracle, BayesRoundTripOnBlocks) {
  // P(X = x | xi_{X,A} = alpha) P(xi = alpha) summed over alpha gives P(X = x).
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const Instance in = random_instance(rng);
    const auto suite = in.suite();
    const auto full = worlds_full(in);
    std::vector<double> rebuilt(in.nx, 0.0), rebuilt_y(in.ny, 0.0);
    for (int alpha = 0; alpha < in.nx; ++alpha) {
      double p_alpha = 0.0;
      for (const World& w : full)
        if (xi_a(in, w) == alpha) p_alpha += w.w;
      if (!(p_alpha > 0.0)) continue;
      const auto f = suite.block_f(alpha).pmf;
      const auto e = suite.block_e(alpha).pmf;
      for (int x = 0; x < in.nx; ++x) rebuilt[x] += f.prob_at(x) * p_alpha;
      for (int y = 0; y < in.ny; ++y) rebuilt_y[y] += e.prob_at(y) * p_alpha;
    }
    for (int x = 0; x < in.nx; ++x) EXPECT_NEAR(rebuilt[x], in.px[x], 1e-12);
    for (int y = 0; y < in.ny; ++y) EXPECT_NEAR(rebuilt_y[y], in.py[y], 1e-12);

    // Block b against block a: P(X = x | xi_y = y) P(xi_y = y) = P(xi_y = y | X = x) P(X = x).
    for (int y = 0; y < in.ny; ++y) {
      if (y == in.yb) continue;
      double p_sel = 0.0;
      for (int x = 0; x < in.nx; ++x) p_sel += in.Bx(x, y) * in.px[x];
      if (!(p_sel > 0.0)) continue;
      const auto b = suite.block_b(y, y).pmf;
      for (int x = 0; x < in.nx; ++x)
        EXPECT_NEAR(b.prob_at(x) * p_sel, suite.block_a(y, x).pmf.prob_at(y) * in.px[x], 1e-12);
    }
  }
}

}  // namespace
}  // namespace pflc::testing::oracle
