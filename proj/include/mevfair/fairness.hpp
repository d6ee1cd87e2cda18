#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mevfair/fourier.hpp"
#include "mevfair/intersecting.hpp"
#include "mevfair/ordering_set.hpp"

namespace mevfair {

inline constexpr double kClassifyTolerance = 1e-12;

// max_{pi in A} f(pi) - (1/n!) sum_{pi in A} f(pi). Throws EmptySetError.
double lambda_plus(const PayoffFn& f, const OrderingSet& a);
// Same, with the mean taken over A instead of S_n.
double lambda_plus_conditional(const PayoffFn& f, const OrderingSet& a);
// max_{pi in A} f(pi) / ((1/n!) sum_{pi in A} f(pi)). Throws DegenerateError
// when the mean vanishes.
double lambda_star(const PayoffFn& f, const OrderingSet& a);

enum class Classification { PerfectlyFair, MaximallyUnfair, Other };
const char* to_string(Classification c);
Classification classify(const PayoffFn& f, const OrderingSet& a, double tol = kClassifyTolerance);

// f restricted to A, zero elsewhere.
PayoffFn restrict_to(const PayoffFn& f, const OrderingSet& a);

struct UncertaintyBound {
  double bound = 0;  // (1 - sinf/s1) * ||f 1_A||_inf
  double lambda_plus = 0;
  double slack = 0;  // bound - lambda_plus
  double concentration = 0;  // sinf / s1 of the restricted payoff
  bool holds = false;        // lambda_plus <= bound + 1e-9
};

// Throws DegenerateError when f vanishes on A.
UncertaintyBound uncertainty_upper_bound(const PayoffFn& f, const OrderingSet& a);

struct FairnessReport {
  double lambda_plus = 0;
  std::optional<double> lambda_star;  // absent when the mean on A is zero
  double max_value = 0;
  double mean_value = 0;  // (1/n!) sum_A f
  Classification classification = Classification::Other;
  std::optional<double> bound_upper;  // uncertainty bound, absent for f 1_A = 0
  double bound_trivial = 0;            // (1 - 1/n!) * max_value
  // |lambda_plus - max_value * (1 - 1/lambda_star)| / max(1, |max_value|),
  // when lambda_star exists.
  std::optional<double> identity_residual;
};

FairnessReport fairness_report(const PayoffFn& f, const OrderingSet& a);

struct Claim1Report {
  std::size_t s = 0;
  std::size_t t_max = 0;
  bool applicable = false;  // t_max >= s
  double k_ratio = 0;       // sinf / s1 of the transform of f
  double d_sq_sum = 0;      // sum of d_lambda^2 over levels <= s
  double bound_form = 0;    // (1 - 1/d_sq_sum) * ||f 1_A||_inf
  double uncertainty_bound = 0;
  double lambda_plus = 0;
};

// Throws DegenerateError for f = 0.
Claim1Report claim1_report(const PayoffFn& f, const OrderingSet& a);

struct Claim2Report {
  std::size_t s = 0;
  std::size_t t_max = 0;
  double size_gate_value = 0;  // (n - t_max)!
  bool applicable = false;     // t_max < s and |A| >= (n - t_max)!
  double lambda_plus = 0;
  double g_inf = 0;       // ||f 1_A||_inf
  double ratio = 0;       // lambda_plus / g_inf
  double rhs_scale = 0;   // (s - t - 1) / (n - t)!; the bound reads (1 - c' rhs_scale) g_inf
  std::optional<double> implied_cprime;  // absent when s - t - 1 <= 0
};

// Throws DegenerateError when f vanishes on A.
Claim2Report claim2_report(const PayoffFn& f, const OrderingSet& a);

struct TruncationDiagnostic {
  std::size_t t = 0;
  std::size_t s = 0;
  // m = sum of (1_A)^{=lambda} over t < n - lambda_1 <= s.
  double one_norm_mid = 0;        // ||m||_1
  double gram_one_norm_mid = 0;   // ||T^T T m||_1, T averaging over symmetrized A
  double eigensum = 0;            // sum over the band of the top Gram eigenvalue
  // g = (f^{<=s})^{>t}: both sides of ||g 1_A||_1 <= ||g 1_A||_inf ||m||_1.
  double g_one_norm_on_a = 0;
  double g_inf_on_a = 0;
  bool band_bound_holds = false;      // one_norm_mid <= eigensum + 1e-9
  bool non_contractive_holds = false; // gram_one_norm_mid >= one_norm_mid - 1e-9
  bool elementary_holds = false;
};

// Throws IndexError unless t < s <= n - 1, EmptySetError for empty A.
TruncationDiagnostic truncation_diagnostic(const PayoffFn& f, const OrderingSet& a, std::size_t t,
                                           std::size_t s);

}  // namespace mevfair
