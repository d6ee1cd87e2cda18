#include "mevfair/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mevfair/errors.hpp"
#include "parallel.hpp"

namespace mevfair {

PayoffFn::PayoffFn(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  if (n == 0) throw SpecError("payoff: n must be >= 1");
  if (n > kEnumerationLimit) {
    throw CapacityError("payoff: n = " + std::to_string(n) + " exceeds enumeration limit");
  }
  if (values_.size() != factorial(n)) {
    throw DimensionError("payoff: expected " + std::to_string(factorial(n)) + " values for n = " +
                         std::to_string(n) + ", got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw SpecError("payoff: values must be finite");
  }
}

PayoffFn PayoffFn::constant(std::size_t n, double c) {
  return PayoffFn(n, std::vector<double>(factorial(n), c));
}

PayoffFn PayoffFn::delta(std::size_t n, Rank at, double height) {
  std::vector<double> v(factorial(n), 0.0);
  if (at >= v.size()) throw IndexError("delta: rank out of range");
  v[at] = height;
  return PayoffFn(n, std::move(v));
}

double PayoffFn::norm1() const {
  double s = 0;
  for (double v : values_) s += std::abs(v);
  return s;
}

double PayoffFn::norm_inf() const {
  double m = 0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PayoffFn::norm2_squared() const {
  double s = 0;
  for (double v : values_) s += v * v;
  return s;
}

double PayoffFn::mean() const {
  double s = 0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

bool PayoffFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

PayoffFn PayoffFn::scaled(double c) const {
  auto v = values_;
  for (double& x : v) x *= c;
  return PayoffFn(n_, std::move(v));
}

PayoffFn operator+(const PayoffFn& a, const PayoffFn& b) {
  if (a.n_ != b.n_) throw DimensionError("payoff sum: degrees differ");
  auto v = a.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return PayoffFn(a.n_, std::move(v));
}

PayoffFn operator-(const PayoffFn& a, const PayoffFn& b) { return a + b.scaled(-1.0); }

double max_abs_difference(const PayoffFn& a, const PayoffFn& b) {
  if (a.degree_n() != b.degree_n()) throw DimensionError("payoff comparison: degrees differ");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const SpectrumBlock& FourierSpectrum::block(const Partition& shape) const {
  for (const auto& b : blocks) {
    if (b.shape == shape) return b;
  }
  throw DimensionError("spectrum has no block for shape " + shape.to_string());
}

FourierSpectrum transform(const PayoffFn& f, const Capacity& capacity) {
  const std::size_t n = f.degree_n();
  capacity.check(n, "transform");
  const auto shapes = partitions_of(n);
  FourierSpectrum out{n, {}};
  out.blocks.reserve(shapes.size());
  for (const auto& s : shapes) out.blocks.push_back({s, Matrix()});

  detail::parallel_for(shapes.size(), [&](std::size_t i) {
    const auto& rep = irrep(shapes[i]);
    const auto d = static_cast<Eigen::Index>(rep.dimension());
    Matrix acc = Matrix::Zero(d, d);
    rep.for_each_element([&](Rank r, const Matrix& m) {
      const double v = f[r];
      if (v != 0.0) acc.noalias() += v * m;
    });
    out.blocks[i].coefficients = std::move(acc);
  });
  return out;
}

namespace {

void check_well_formed(const FourierSpectrum& spectrum) {
  const auto shapes = partitions_of(spectrum.n);
  if (spectrum.blocks.size() != shapes.size()) {
    throw DimensionError("spectrum must carry one block per partition of n");
  }
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& b = spectrum.blocks[i];
    const auto d = static_cast<Eigen::Index>(dim(shapes[i]));
    if (b.shape != shapes[i] || b.coefficients.rows() != d || b.coefficients.cols() != d) {
      throw DimensionError("spectrum block " + shapes[i].to_string() + " malformed");
    }
  }
}

// (d / n!) <F, rho(pi)>_F for every pi.
std::vector<double> block_synthesis(const SpectrumBlock& block, std::size_t n) {
  std::vector<double> out(factorial(n), 0.0);
  if (block.coefficients.isZero(0.0)) return out;
  const auto& rep = irrep(block.shape);
  const double scale = static_cast<double>(rep.dimension()) / static_cast<double>(factorial(n));
  rep.for_each_element([&](Rank r, const Matrix& m) {
    out[r] = scale * block.coefficients.cwiseProduct(m).sum();
  });
  return out;
}

}  // namespace

PayoffFn inverse(const FourierSpectrum& spectrum) {
  check_well_formed(spectrum);
  std::vector<std::vector<double>> parts(spectrum.blocks.size());
  detail::parallel_for(parts.size(), [&](std::size_t i) {
    parts[i] = block_synthesis(spectrum.blocks[i], spectrum.n);
  });
  std::vector<double> values(factorial(spectrum.n), 0.0);
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < values.size(); ++r) values[r] += p[r];
  }
  return PayoffFn(spectrum.n, std::move(values));
}

double spectral_energy(const FourierSpectrum& spectrum) {
  double s = 0;
  for (const auto& b : spectrum.blocks) {
    s += static_cast<double>(dim(b.shape)) * b.coefficients.squaredNorm();
  }
  return s / static_cast<double>(factorial(spectrum.n));
}

PayoffFn isotypic_project(const FourierSpectrum& spectrum, const Partition& shape) {
  return PayoffFn(spectrum.n, block_synthesis(spectrum.block(shape), spectrum.n));
}

PayoffFn isotypic_project(const PayoffFn& f, const Partition& shape) {
  if (shape.size() != f.degree_n()) {
    throw DimensionError("isotypic_project: shape " + shape.to_string() + " is not a partition of " +
                         std::to_string(f.degree_n()));
  }
  const auto& rep = irrep(shape);
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  SpectrumBlock block{shape, Matrix::Zero(d, d)};
  rep.for_each_element([&](Rank r, const Matrix& m) {
    if (f[r] != 0.0) block.coefficients.noalias() += f[r] * m;
  });
  return PayoffFn(f.degree_n(), block_synthesis(block, f.degree_n()));
}

std::size_t degree(const FourierSpectrum& spectrum, double f_norm2, double tol) {
  if (f_norm2 == 0.0) throw DegenerateError("degree is undefined for the zero function");
  std::optional<std::size_t> best;
  for (const auto& b : spectrum.blocks) {
    if (b.coefficients.norm() > tol * f_norm2) {
      best = std::max(best.value_or(0), b.shape.level());
    }
  }
  if (!best) throw DegenerateError("degree: every block is below tolerance");
  return *best;
}

std::size_t degree(const PayoffFn& f, double tol) {
  if (f.is_zero()) throw DegenerateError("degree is undefined for the zero function");
  return degree(transform(f, Capacity{kEnumerationLimit}), std::sqrt(f.norm2_squared()), tol);
}

PayoffFn level_band(const FourierSpectrum& spectrum, std::size_t lo, std::size_t hi) {
  FourierSpectrum band = spectrum;
  for (auto& b : band.blocks) {
    const auto level = b.shape.level();
    if (level <= lo || level > hi) b.coefficients.setZero();
  }
  return inverse(band);
}

namespace {

void check_truncation(const PayoffFn& f, std::size_t t) {
  if (t + 1 > f.degree_n()) {
    throw IndexError("truncation level " + std::to_string(t) + " outside 0.." +
                     std::to_string(f.degree_n() - 1));
  }
}

}  // namespace

PayoffFn truncate_low(const PayoffFn& f, std::size_t t) {
  check_truncation(f, t);
  const auto spectrum = transform(f, Capacity{kEnumerationLimit});
  FourierSpectrum low = spectrum;
  for (auto& b : low.blocks) {
    if (b.shape.level() > t) b.coefficients.setZero();
  }
  return inverse(low);
}

PayoffFn truncate_high(const PayoffFn& f, std::size_t t) { return f - truncate_low(f, t); }

SchattenSummary schatten_summary(const FourierSpectrum& spectrum) {
  SchattenSummary out;
  for (const auto& b : spectrum.blocks) {
    Eigen::JacobiSVD<Matrix> svd(b.coefficients);
    Eigen::VectorXd sv = svd.singularValues();
    out.s1 += static_cast<double>(dim(b.shape)) * sv.sum();
    if (sv.size() > 0) out.sinf = std::max(out.sinf, sv.maxCoeff());
    out.per_block.emplace_back(b.shape, std::move(sv));
  }
  return out;
}

UncertaintyCheck uncertainty_check(const PayoffFn& f, const Capacity& capacity) {
  if (f.is_zero()) throw DegenerateError("uncertainty_check: zero function");
  const auto summary = schatten_summary(transform(f, capacity));
  UncertaintyCheck out;
  out.lhs_ratio = f.norm1() / f.norm_inf();
  out.rhs_ratio = summary.spread();
  out.product = out.lhs_ratio * out.rhs_ratio;
  out.group_order = static_cast<double>(factorial(f.degree_n()));
  out.holds = out.product >= out.group_order * (1.0 - 1e-9);
  return out;
}

}  // namespace mevfair
