#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace pflc::mixed {

/// GSL accepts a result once its error estimate is below the larger of the
/// two tolerances, so the relative one is kept small enough that the absolute
/// 1e-9 governs integrals of order one.
struct QuadratureOptions {
  double epsabs = 1e-9;
  double epsrel = 1e-12;
  std::size_t limit = 2000;
};

/// Adaptive Gauss-Kronrod integral of f over [lo, hi] with the listed
/// interior points treated as known singularities or kinks. Bounds must be
/// finite. Throws QuadratureFailure when the tolerance is not reached.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 std::span<const double> breakpoints = {}, const QuadratureOptions& options = {});

}  // namespace pflc::mixed
