#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mevfair/partition.hpp"
#include "mevfair/permutation.hpp"
#include "mevfair/representation.hpp"

namespace mevfair {

/// Real function on S_n stored densely in Lehmer order.
class PayoffFn {
 public:
  // Throws DimensionError unless values.size() == n!, SpecError on non-finite
  // values.
  PayoffFn(std::size_t n, std::vector<double> values);
  static PayoffFn constant(std::size_t n, double c);
  static PayoffFn delta(std::size_t n, Rank at, double height = 1.0);

  std::size_t degree_n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Rank r) const { return values_[r]; }
  const std::vector<double>& values() const { return values_; }

  double norm1() const;
  double norm_inf() const;
  double norm2_squared() const;
  double mean() const;
  bool is_zero() const;

  PayoffFn scaled(double c) const;
  friend PayoffFn operator+(const PayoffFn& a, const PayoffFn& b);
  friend PayoffFn operator-(const PayoffFn& a, const PayoffFn& b);

 private:
  std::size_t n_;
  std::vector<double> values_;
};

double max_abs_difference(const PayoffFn& a, const PayoffFn& b);

struct SpectrumBlock {
  Partition shape;
  Matrix coefficients;  // sum_pi f(pi) rho^shape(pi)
};

/// Full group Fourier transform: one block per partition of n, in
/// partitions_of(n) order.
struct FourierSpectrum {
  std::size_t n = 0;
  std::vector<SpectrumBlock> blocks;

  const SpectrumBlock& block(const Partition& shape) const;
};

FourierSpectrum transform(const PayoffFn& f, const Capacity& capacity = {});

// f(pi) = (1/n!) sum_lambda d_lambda Tr[F_lambda rho(pi)^T].
PayoffFn inverse(const FourierSpectrum& spectrum);

// (1/n!) sum_lambda d_lambda ||F_lambda||_F^2, equal to sum_pi f(pi)^2.
double spectral_energy(const FourierSpectrum& spectrum);

// f^{=lambda}(pi) = (d_lambda / n!) Tr[F_lambda rho(pi)^T].
PayoffFn isotypic_project(const PayoffFn& f, const Partition& shape);
PayoffFn isotypic_project(const FourierSpectrum& spectrum, const Partition& shape);

inline constexpr double kDegreeTolerance = 1e-9;

// max{ n - lambda_1 : ||F_lambda||_F > tol * ||f||_2 }. Throws DegenerateError
// for the zero function.
std::size_t degree(const PayoffFn& f, double tol = kDegreeTolerance);
std::size_t degree(const FourierSpectrum& spectrum, double f_norm2, double tol = kDegreeTolerance);

// Sum of isotypic components with n - lambda_1 <= t, and the remainder.
PayoffFn truncate_low(const PayoffFn& f, std::size_t t);
PayoffFn truncate_high(const PayoffFn& f, std::size_t t);

// Sum of isotypic components with lo < n - lambda_1 <= hi.
PayoffFn level_band(const FourierSpectrum& spectrum, std::size_t lo, std::size_t hi);

struct SchattenSummary {
  double s1 = 0;    // sum_lambda d_lambda * sum_i sigma_i(F_lambda)
  double sinf = 0;  // max_lambda sigma_max(F_lambda)
  std::vector<std::pair<Partition, Eigen::VectorXd>> per_block;

  // sinf / s1, in (0, 1]; the direction used by the fairness bound.
  double concentration() const { return sinf / s1; }
  // s1 / sinf.
  double spread() const { return s1 / sinf; }
};

SchattenSummary schatten_summary(const FourierSpectrum& spectrum);

struct UncertaintyCheck {
  double lhs_ratio = 0;  // ||f||_1 / ||f||_inf
  double rhs_ratio = 0;  // s1 / sinf
  double product = 0;
  double group_order = 0;
  bool holds = false;
};

// Throws DegenerateError for the zero function.
UncertaintyCheck uncertainty_check(const PayoffFn& f, const Capacity& capacity = {});

}  // namespace mevfair
