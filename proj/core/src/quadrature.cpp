#include "pflc/mixed/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pflc/error.hpp"

namespace pflc::mixed {
namespace {

struct Callback {
  const std::function<double(double)>* f;
  std::exception_ptr error;
};

double trampoline(double x, void* params) {
  auto* cb = static_cast<Callback*>(params);
  if (cb->error) return 0.0;
  try {
    return (*cb->f)(x);
  } catch (...) {
    cb->error = std::current_exception();
    return 0.0;
  }
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, std::span<const double> breakpoints,
                 const QuadratureOptions& options) {
  static std::once_flag handler_once;
  std::call_once(handler_once, [] { gsl_set_error_handler_off(); });

  if (!std::isfinite(lo) || !std::isfinite(hi)) raise(ErrorCode::QuadratureFailure, "integration bounds must be finite");
  if (lo == hi) return 0.0;
  if (lo > hi) return -integrate(f, hi, lo, breakpoints, options);

  std::vector<double> pts{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) pts.push_back(b);
  pts.push_back(hi);
  std::sort(pts.begin() + 1, pts.end() - 1);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(gsl_integration_workspace_alloc(options.limit));
  Callback cb{&f, nullptr};
  gsl_function gf{&trampoline, &cb};
  double result = 0.0;
  double abserr = 0.0;
  const int status = gsl_integration_qagp(&gf, pts.data(), pts.size(), options.epsabs, options.epsrel, options.limit,
                                          ws.get(), &result, &abserr);
  if (cb.error) std::rethrow_exception(cb.error);
  if (status != GSL_SUCCESS) {
    raise(ErrorCode::QuadratureFailure, std::string("integration failed: ") + gsl_strerror(status) +
                                            " (estimated error " + std::to_string(abserr) + ")");
  }
  return result;
}

}  // namespace pflc::mixed
