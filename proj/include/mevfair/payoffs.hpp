#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mevfair/fourier.hpp"
#include "mevfair/ordering_set.hpp"

namespace mevfair {

/// Sandwich-attack payoff over orderings of n user trades.
///
/// Executing trade d at prior price p earns beta * d^2 * p and moves the price
/// to p * (1 + gamma * d).
struct CfmmModel {
  std::vector<double> deltas;
  double p0 = 100.0;
  double gamma = 0.001;
  double beta = 1.0;

  // Throws SpecError if p0 <= 0, gamma < 0, beta < 0, or some trade could
  // drive the price to zero or below.
  void validate() const;
};

/// k up-moves (labels 1..k) and k down-moves (labels k+1..2k) of one unit
/// each; an ordering liquidates if the running price ever reaches p0 - c.
struct LiquidationModel {
  std::size_t k = 2;
  int c = 1;
  double p0 = 100.0;

  // Throws SpecError unless 0 < c < k.
  void validate() const;
};

/// Term a * prod_l [pi(i_l) = j_l] with 1-based (i, j) pairs.
struct JuntaTerm {
  std::vector<std::pair<int, int>> constraints;
  double coefficient = 1.0;
};

struct RandomDist {
  enum class Kind { Uniform01, Sparse };
  Kind kind = Kind::Uniform01;
  std::size_t k = 1;  // nonzero count for Sparse

  static RandomDist uniform01() { return {}; }
  static RandomDist sparse(std::size_t k) { return {Kind::Sparse, k}; }
};

PayoffFn cfmm_payoff(const CfmmModel& m, const Capacity& capacity = {});
PayoffFn liquidation_payoff(const LiquidationModel& m, const Capacity& capacity = {});
PayoffFn indicator_payoff(const OrderingSet& a);
// Throws SpecError on repeated i or j inside a term, or pairs outside 1..n.
PayoffFn junta_payoff(const std::vector<JuntaTerm>& terms, std::size_t n,
                      const Capacity& capacity = {});
// Uniform01 draws each value in [0, 1); Sparse places k values in (0, 1] at
// distinct positions.
PayoffFn random_payoff(std::size_t n, std::uint64_t seed, RandomDist dist = {},
                       const Capacity& capacity = {});

}  // namespace mevfair
