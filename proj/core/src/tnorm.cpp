#include "pflc/fuzzy/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "pflc/error.hpp"
#include "pflc/fuzzy/membership.hpp"

namespace pflc::fuzzy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double drastic_value(double a, double b) {
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  return 0.0;
}

// exp(-(|log a|^p + |log b|^p)^(1/p)) with lo <= hi. The p-norm of the two
// logs is evaluated as M * (1 + (m/M)^p)^(1/p) so large p neither overflows
// nor underflows.
double aczel_alsina(double lo, double hi, double p) {
  if (lo == 0.0) return 0.0;
  const double big = -std::log(lo);
  const double small = -std::log(hi);
  if (big == 0.0) return 1.0;
  const double ratio = small / big;
  const double norm = big * std::exp(std::log1p(std::pow(ratio, p)) / p);
  return std::exp(-norm);
}

double sugeno_weber(double lo, double hi, double p) {
  const double v = (lo + hi - 1.0) / (1.0 + p) + lo * hi * (p / (1.0 + p));
  return std::max(0.0, v);
}

}  // namespace

TNorm TNorm::aczel_alsina(double p) {
  if (!(p >= 0.0)) {
    std::ostringstream os;
    os << "Aczel-Alsina parameter " << p << " outside [0, inf]";
    raise(ErrorCode::DomainError, os.str());
  }
  return TNorm(TNormKind::AczelAlsina, p);
}

TNorm TNorm::sugeno_weber(double p) {
  if (!(p >= -1.0)) {
    std::ostringstream os;
    os << "Sugeno-Weber parameter " << p << " outside [-1, inf]";
    raise(ErrorCode::DomainError, os.str());
  }
  return TNorm(TNormKind::SugenoWeber, p);
}

double TNorm::operator()(double a, double b) const {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "t-norm arguments (" << a << ", " << b << ") outside [0,1]";
    raise(ErrorCode::DomainError, os.str());
  }
  // 1 is the identity for every t-norm; returning the other argument
  // directly keeps T(a, 1) == a bit-exact.
  if (a == 1.0) return b;
  if (b == 1.0) return a;
  // Canonical argument order makes commutativity bit-exact.
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  switch (kind_) {
    case TNormKind::Min:
      return lo;
    case TNormKind::Product:
      return lo * hi;
    case TNormKind::Lukasiewicz:
      return std::max(0.0, lo + hi - 1.0);
    case TNormKind::Drastic:
      return drastic_value(lo, hi);
    case TNormKind::NilpotentMin:
      return lo + hi > 1.0 ? lo : 0.0;
    case TNormKind::HamacherProduct:
      if (hi == 0.0) return 0.0;
      return lo * hi / (lo + hi - lo * hi);
    case TNormKind::AczelAlsina:
      if (parameter_ == 0.0) return drastic_value(lo, hi);
      if (parameter_ == kInf) return lo;
      return fuzzy::aczel_alsina(lo, hi, parameter_);
    case TNormKind::SugenoWeber:
      if (parameter_ == -1.0) return drastic_value(lo, hi);
      if (parameter_ == kInf) return lo * hi;
      return fuzzy::sugeno_weber(lo, hi, parameter_);
  }
  return 0.0;
}

double TNorm::fold(std::span<const double> values) const {
  double acc = 1.0;
  for (double v : values) acc = (*this)(acc, v);
  return acc;
}

std::string TNorm::label() const {
  std::string out(to_string(kind_));
  if (is_parametric()) {
    std::ostringstream os;
    if (std::isinf(parameter_))
      os << "(inf)";
    else
      os << "(" << parameter_ << ")";
    out += os.str();
  }
  return out;
}

double tnorm_eval(const TNorm& t, double a, double b) { return t(a, b); }

double tnorm_and_membership(const TNorm& t, const FuzzyAttribute& a1, const FuzzyAttribute& a2, double x) {
  return t(a1.degree(x), a2.degree(x));
}

std::string_view to_string(TNormKind kind) noexcept {
  switch (kind) {
    case TNormKind::Min: return "min";
    case TNormKind::Product: return "product";
    case TNormKind::Lukasiewicz: return "lukasiewicz";
    case TNormKind::Drastic: return "drastic";
    case TNormKind::NilpotentMin: return "nilpotent_min";
    case TNormKind::HamacherProduct: return "hamacher_product";
    case TNormKind::AczelAlsina: return "aczel_alsina";
    case TNormKind::SugenoWeber: return "sugeno_weber";
  }
  return "unknown";
}

TNormKind parse_tnorm_kind(std::string_view name) {
  for (auto k : {TNormKind::Min, TNormKind::Product, TNormKind::Lukasiewicz, TNormKind::Drastic,
                 TNormKind::NilpotentMin, TNormKind::HamacherProduct, TNormKind::AczelAlsina,
                 TNormKind::SugenoWeber}) {
    if (to_string(k) == name) return k;
  }
  if (name == "prod") return TNormKind::Product;
  if (name == "luk") return TNormKind::Lukasiewicz;
  raise(ErrorCode::ParseError, "unknown t-norm '" + std::string(name) + "'");
}

}  // namespace pflc::fuzzy

namespace pflc::fuzzy {
namespace {

std::vector<double> unit_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

}  // namespace

TNormAxiomReport check_tnorm_axioms(const TNorm& t, std::size_t commutativity_n, std::size_t associativity_n,
                                    std::size_t identity_n, std::size_t monotonicity_n) {
  TNormAxiomReport r;
  const auto gc = unit_grid(commutativity_n);
  for (double a : gc)
    for (double b : gc) r.commutativity = std::max(r.commutativity, std::abs(t(a, b) - t(b, a)));

  for (double a : unit_grid(identity_n)) {
    r.identity = std::max(r.identity, std::abs(t(a, 1.0) - a));
    r.annihilator = std::max(r.annihilator, t(a, 0.0));
  }

  const auto ga = unit_grid(associativity_n);
  for (double a : ga)
    for (double b : ga)
      for (double c : ga) r.associativity = std::max(r.associativity, std::abs(t(a, t(b, c)) - t(t(a, b), c)));

  const auto gm = unit_grid(monotonicity_n);
  const std::size_t n = gm.size();
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = t(gm[i], gm[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = i; k < n; ++k)
        for (std::size_t l = j; l < n; ++l)
          r.monotonicity = std::max(r.monotonicity, table[i * n + j] - table[k * n + l]);
  return r;
}

}  // namespace pflc::fuzzy
