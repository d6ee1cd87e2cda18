#include "mevfair/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mevfair/cayley.hpp"
#include "mevfair/errors.hpp"

namespace mevfair {

namespace {

void require_same_n(const PayoffFn& f, const OrderingSet& a, const char* op) {
  if (f.degree_n() != a.degree_n()) {
    throw DimensionError(std::string(op) + ": payoff has n = " + std::to_string(f.degree_n()) +
                         " but the set has n = " + std::to_string(a.degree_n()));
  }
}

struct Moments {
  double max = 0;
  double sum = 0;
};

Moments moments_on(const PayoffFn& f, const OrderingSet& a, const char* op) {
  require_same_n(f, a, op);
  a.require_nonempty(op);
  Moments m{f[a.members().front()], 0.0};
  for (Rank r : a.members()) {
    m.max = std::max(m.max, f[r]);
    m.sum += f[r];
  }
  return m;
}

}  // namespace

double lambda_plus(const PayoffFn& f, const OrderingSet& a) {
  const auto m = moments_on(f, a, "lambda_plus");
  return m.max - m.sum / static_cast<double>(f.size());
}

double lambda_plus_conditional(const PayoffFn& f, const OrderingSet& a) {
  const auto m = moments_on(f, a, "lambda_plus_conditional");
  return m.max - m.sum / static_cast<double>(a.size());
}

double lambda_star(const PayoffFn& f, const OrderingSet& a) {
  const auto m = moments_on(f, a, "lambda_star");
  const double mean = m.sum / static_cast<double>(f.size());
  if (mean == 0.0) throw DegenerateError("lambda_star: mean of f on A is zero");
  return m.max / mean;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::PerfectlyFair: return "perfectly_fair";
    case Classification::MaximallyUnfair: return "maximally_unfair";
    case Classification::Other: return "other";
  }
  return "other";
}

Classification classify(const PayoffFn& f, const OrderingSet& a, double tol) {
  const auto m = moments_on(f, a, "classify");
  const double order = static_cast<double>(f.size());
  const double lp = m.max - m.sum / order;
  if (std::abs(lp) <= tol) return Classification::PerfectlyFair;
  if (std::abs(lp - (1.0 - 1.0 / order) * m.max) <= tol) return Classification::MaximallyUnfair;
  return Classification::Other;
}

PayoffFn restrict_to(const PayoffFn& f, const OrderingSet& a) {
  require_same_n(f, a, "restrict_to");
  std::vector<double> v(f.size(), 0.0);
  for (Rank r : a.members()) v[r] = f[r];
  return PayoffFn(f.degree_n(), std::move(v));
}

UncertaintyBound uncertainty_upper_bound(const PayoffFn& f, const OrderingSet& a) {
  const auto g = restrict_to(f, a);
  if (g.is_zero()) throw DegenerateError("uncertainty_upper_bound: f vanishes on A");
  const auto summary = schatten_summary(transform(g, Capacity{kEnumerationLimit}));
  UncertaintyBound out;
  out.concentration = summary.concentration();
  out.bound = (1.0 - out.concentration) * g.norm_inf();
  out.lambda_plus = lambda_plus(f, a);
  out.slack = out.bound - out.lambda_plus;
  out.holds = out.lambda_plus <= out.bound + 1e-9;
  return out;
}

FairnessReport fairness_report(const PayoffFn& f, const OrderingSet& a) {
  const auto m = moments_on(f, a, "fairness_report");
  const double order = static_cast<double>(f.size());
  FairnessReport out;
  out.max_value = m.max;
  out.mean_value = m.sum / order;
  out.lambda_plus = out.max_value - out.mean_value;
  out.bound_trivial = (1.0 - 1.0 / order) * out.max_value;
  out.classification = classify(f, a);
  if (out.mean_value != 0.0) {
    out.lambda_star = out.max_value / out.mean_value;
    out.identity_residual = std::abs(out.lambda_plus - out.max_value * (1.0 - 1.0 / *out.lambda_star)) /
                            std::max(1.0, std::abs(out.max_value));
  }
  if (!restrict_to(f, a).is_zero()) out.bound_upper = uncertainty_upper_bound(f, a).bound;
  return out;
}

Claim1Report claim1_report(const PayoffFn& f, const OrderingSet& a) {
  require_same_n(f, a, "claim1_report");
  const auto spectrum = transform(f, Capacity{kEnumerationLimit});
  Claim1Report out;
  out.s = degree(spectrum, std::sqrt(f.norm2_squared()));
  out.t_max = intersection_profile(a).t_max;
  out.applicable = out.t_max >= out.s;
  out.k_ratio = schatten_summary(spectrum).concentration();
  for (const auto& shape : partitions_of(f.degree_n())) {
    if (shape.level() <= out.s) {
      const auto d = static_cast<double>(dim(shape));
      out.d_sq_sum += d * d;
    }
  }
  const auto g = restrict_to(f, a);
  out.bound_form = (1.0 - 1.0 / out.d_sq_sum) * g.norm_inf();
  out.lambda_plus = lambda_plus(f, a);
  out.uncertainty_bound = g.is_zero() ? 0.0 : uncertainty_upper_bound(f, a).bound;
  return out;
}

Claim2Report claim2_report(const PayoffFn& f, const OrderingSet& a) {
  const auto g = restrict_to(f, a);
  if (g.is_zero()) throw DegenerateError("claim2_report: f vanishes on A");
  const std::size_t n = f.degree_n();
  Claim2Report out;
  out.s = degree(f);
  out.t_max = intersection_profile(a).t_max;
  out.size_gate_value = static_cast<double>(factorial(n - std::min(out.t_max, n)));
  out.applicable = out.t_max < out.s && static_cast<double>(a.size()) >= out.size_gate_value;
  out.lambda_plus = lambda_plus(f, a);
  out.g_inf = g.norm_inf();
  out.ratio = out.lambda_plus / out.g_inf;
  if (out.s > out.t_max + 1) {
    const double width = static_cast<double>(out.s - out.t_max - 1);
    out.rhs_scale = width / out.size_gate_value;
    out.implied_cprime = (1.0 - out.ratio) / out.rhs_scale;
  }
  return out;
}

TruncationDiagnostic truncation_diagnostic(const PayoffFn& f, const OrderingSet& a, std::size_t t,
                                           std::size_t s) {
  require_same_n(f, a, "truncation_diagnostic");
  a.require_nonempty("truncation_diagnostic");
  const std::size_t n = f.degree_n();
  if (!(t < s && s + 1 <= n)) {
    throw IndexError("truncation_diagnostic: need t < s <= n - 1, got t = " + std::to_string(t) +
                     ", s = " + std::to_string(s));
  }
  const Capacity cap{kEnumerationLimit};
  const auto family = symmetrize(a);
  const auto indicator_hat = transform(restrict_to(PayoffFn::constant(n, 1.0), a), cap);

  FourierSpectrum band = indicator_hat;
  for (auto& b : band.blocks) {
    const auto level = b.shape.level();
    if (level <= t || level > s) b.coefficients.setZero();
  }
  TruncationDiagnostic out;
  out.t = t;
  out.s = s;
  out.one_norm_mid = inverse(band).norm1();
  out.gram_one_norm_mid = inverse(apply_gram(family, band)).norm1();

  const auto spectrum = spectrum_report(family);
  for (const auto& b : spectrum.blocks) {
    const auto level = b.shape.level();
    if (level > t && level <= s) out.eigensum += b.gram_eigenvalues.front();
  }

  const auto g_on_a = restrict_to(level_band(transform(f, cap), t, s), a);
  out.g_one_norm_on_a = g_on_a.norm1();
  out.g_inf_on_a = g_on_a.norm_inf();
  out.band_bound_holds = out.one_norm_mid <= out.eigensum + 1e-9;
  out.non_contractive_holds = out.gram_one_norm_mid >= out.one_norm_mid - 1e-9;
  out.elementary_holds = out.g_one_norm_on_a <= out.g_inf_on_a * out.one_norm_mid + 1e-9;
  return out;
}

}  // namespace mevfair
