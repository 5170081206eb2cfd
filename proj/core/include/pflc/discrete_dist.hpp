#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pflc {

struct Atom {
  double value = 0.0;
  double prob = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite probability mass function over real values.
///
/// Values are kept strictly increasing. Zero-probability atoms are allowed and
/// retained, since a sample space may contain elements the pmf never draws
/// (the first decade of the reproductive-day table, for instance).
class DiscreteDist {
 public:
  static constexpr double kMassTolerance = 1e-12;

  DiscreteDist() = default;

  /// Sorts by value; throws ValidationError on duplicates, negative or
  /// non-finite masses, or a total mass away from 1 by more than 1e-12.
  explicit DiscreteDist(std::vector<Atom> atoms);

  static DiscreteDist uniform(std::span<const double> values);
  static DiscreteDist bernoulli(double p);
  static DiscreteDist point(double value);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  std::vector<double> values() const;

  /// Index of the atom whose value equals `value` exactly.
  std::optional<std::size_t> index_of(double value) const noexcept;
  /// Index of the atom within `tol` of `value`, nearest first.
  std::optional<std::size_t> index_near(double value, double tol) const noexcept;

  bool contains(double value) const noexcept { return index_of(value).has_value(); }

  /// P(X = value); 0 when the value is not an atom.
  double prob_at(double value) const noexcept;
  /// P(X = value) with matching tolerance `tol`.
  double prob_near(double value, double tol) const noexcept;

  double mean() const noexcept;
  double min_value() const;
  double max_value() const;

  friend bool operator==(const DiscreteDist&, const DiscreteDist&) = default;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace pflc
