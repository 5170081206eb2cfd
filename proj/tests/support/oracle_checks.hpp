#pragma once

// Every block of the conditional suite against the enumeration oracle for
// one instance. Used by the oracle tests and the acceptance binary.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "enumeration_oracle.hpp"
#include "pflc/error.hpp"

namespace pflc::testing::oracle {

struct Mismatch {
  std::string where;
  std::string detail;
};

template <typename F>
void compare(std::vector<Mismatch>& out, const std::string& where, const Answer& expected, F&& compute,
             double tol = 1e-12) {
  if (!(expected.denominator > 0.0)) {
    try {
      compute();
      out.push_back({where, "expected ConditionImpossible"});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConditionImpossible) out.push_back({where, e.what()});
    }
    return;
  }
  discrete::CondResult got;
  try {
    got = compute();
  } catch (const Error& e) {
    out.push_back({where, e.what()});
    return;
  }
  double mean = 0.0;
  for (const auto& [v, p] : expected.pmf) {
    mean += v * p;
    if (std::abs(got.pmf.prob_at(v) - p) > tol) {
      std::ostringstream os;
      os.precision(17);
      os << "at " << v << ": got " << got.pmf.prob_at(v) << ", enumeration " << p;
      out.push_back({where, os.str()});
    }
  }
  for (const Atom& a : got.pmf.atoms()) {
    if (!expected.pmf.count(a.value) && a.prob > tol) out.push_back({where, "unexpected mass"});
  }
  if (std::abs(got.expectation - mean) > 1e-11) out.push_back({where, "expectation"});
}

inline std::vector<Mismatch> check_all_blocks(const Instance& in) {
  std::vector<Mismatch> bad;
  const discrete::ConditionalSuite suite = in.suite();
  const auto full = worlds_full(in);
  auto tag = [](char block, std::initializer_list<double> args) {
    std::ostringstream os;
    os << block;
    for (double a : args) os << ' ' << a;
    return os.str();
  };

  for (int y = 0; y < in.ny; ++y) {
    const auto ws = worlds_y_given_x(in, y);
    for (int alpha = 0; alpha < in.nx; ++alpha) {
      const auto ans = condition(ws, [&](const World& w) { return w.x == alpha; },
                                 [&](const World& w) { return xi_b(in, w); });
      compare(bad, tag('a', {double(y), double(alpha)}), ans, [&] { return suite.block_a(y, alpha); });
    }
    for (int beta : {y, in.yb}) {
      const auto ans = condition(ws, [&](const World& w) { return xi_b(in, w) == beta; },
                                 [&](const World& w) { return double(w.x); });
      compare(bad, tag('b', {double(y), double(beta)}), ans, [&] { return suite.block_b(y, beta); });
    }
  }
  for (int beta = 0; beta < in.ny; ++beta) {
    const auto ans = condition(full, [&](const World& w) { return w.y == beta; },
                               [&](const World& w) { return xi_a(in, w); });
    compare(bad, tag('c', {double(beta)}), ans, [&] { return suite.block_c(beta); });
  }
  for (int x = 0; x < in.nx; ++x)
    for (int y = 0; y < in.ny; ++y) {
      const auto ws = worlds_fixed_xy(in, x, y);
      for (int alpha : {x, in.xa}) {
        const auto ans = condition(ws, [&](const World& w) { return xi_a(in, w) == alpha; },
                                   [&](const World& w) { return xi_b(in, w); });
        compare(bad, tag('d', {double(x), double(y), double(alpha)}), ans,
                [&] { return suite.block_d(x, y, alpha); });
      }
    }
  for (int alpha = 0; alpha < in.nx; ++alpha) {
    const auto e = condition(full, [&](const World& w) { return xi_a(in, w) == alpha; },
                             [&](const World& w) { return double(w.y); });
    compare(bad, tag('e', {double(alpha)}), e, [&] { return suite.block_e(alpha); });
    const auto f = condition(full, [&](const World& w) { return xi_a(in, w) == alpha; },
                             [&](const World& w) { return double(w.x); });
    compare(bad, tag('f', {double(alpha)}), f, [&] { return suite.block_f(alpha); });
    // The printed weighting of block i equals the total law only when X, Y
    // and the selection of X are unrelated to Y.
    if (in.joint.total_law_weighting || (in.joint.xy_independent && in.joint.sel_a_independent_of_y)) {
      const auto i = condition(full, [&](const World& w) { return xi_a(in, w) == alpha; },
                               [&](const World& w) { return xi_b(in, w); });
      compare(bad, tag('i', {double(alpha)}), i, [&] { return suite.block_i(alpha); });
    }
  }
  for (int x = 0; x < in.nx; ++x) {
    const auto ws = worlds_fixed_x(in, x);
    for (int alpha : {x, in.xa}) {
      const auto ans = condition(ws, [&](const World& w) { return xi_a(in, w) == alpha; },
                                 [&](const World& w) { return xi_b(in, w); });
      compare(bad, tag('g', {double(x), double(alpha)}), ans, [&] { return suite.block_g(x, alpha); });
    }
  }
  for (int y = 0; y < in.ny; ++y) {
    const auto ws = worlds_fixed_y(in, y);
    for (int alpha = 0; alpha < in.nx; ++alpha) {
      const auto ans = condition(ws, [&](const World& w) { return xi_a(in, w) == alpha; },
                                 [&](const World& w) { return xi_b(in, w); });
      compare(bad, tag('h', {double(y), double(alpha)}), ans, [&] { return suite.block_h(y, alpha); });
    }
  }
  return bad;
}

}  // namespace pflc::testing::oracle
