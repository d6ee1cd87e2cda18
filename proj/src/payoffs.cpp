#include "mevfair/payoffs.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mevfair/errors.hpp"
#include "mevfair/rng.hpp"

namespace mevfair {

void CfmmModel::validate() const {
  if (deltas.empty()) throw SpecError("cfmm: deltas must be nonempty");
  if (!(p0 > 0) || !std::isfinite(p0)) throw SpecError("cfmm: p0 must be positive");
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw SpecError("cfmm: gamma must be >= 0");
  if (!(beta >= 0) || !std::isfinite(beta)) throw SpecError("cfmm: beta must be >= 0");
  // Prices are p0 times a product of the factors, so all orderings stay
  // positive exactly when every factor is.
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!std::isfinite(deltas[i])) throw SpecError("cfmm: deltas must be finite");
    if (1.0 + gamma * deltas[i] <= 0.0) {
      throw SpecError("cfmm: delta[" + std::to_string(i) + "] = " + std::to_string(deltas[i]) +
                      " drives the price non-positive");
    }
  }
}

PayoffFn cfmm_payoff(const CfmmModel& m, const Capacity& capacity) {
  m.validate();
  const std::size_t n = m.deltas.size();
  capacity.check(n, "cfmm_payoff");
  const auto& group = SymmetricGroup::get(n);
  std::vector<double> values(group.order());
  for (Rank r = 0; r < group.order(); ++r) {
    const auto slots = group.images(r);
    double price = m.p0;
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = m.deltas[slots[i]];
      total += m.beta * d * d * price;
      price *= 1.0 + m.gamma * d;
    }
    values[r] = total;
  }
  return PayoffFn(n, std::move(values));
}

void LiquidationModel::validate() const {
  if (k == 0) throw SpecError("liquidation: k must be >= 1");
  if (c <= 0 || static_cast<std::size_t>(c) >= k) {
    throw SpecError("liquidation: need 0 < c < k, got k = " + std::to_string(k) +
                    ", c = " + std::to_string(c));
  }
  if (!(p0 > 0)) throw SpecError("liquidation: p0 must be positive");
}

PayoffFn liquidation_payoff(const LiquidationModel& m, const Capacity& capacity) {
  m.validate();
  const std::size_t n = 2 * m.k;
  capacity.check(n, "liquidation_payoff");
  const auto& group = SymmetricGroup::get(n);
  std::vector<double> values(group.order(), 0.0);
  for (Rank r = 0; r < group.order(); ++r) {
    int level = 0;
    for (auto label : group.images(r)) {
      level += label < m.k ? 1 : -1;
      if (level <= -m.c) {
        values[r] = 1.0;
        break;
      }
    }
  }
  return PayoffFn(n, std::move(values));
}

PayoffFn indicator_payoff(const OrderingSet& a) {
  std::vector<double> values(factorial(a.degree_n()), 0.0);
  for (Rank r : a.members()) values[r] = 1.0;
  return PayoffFn(a.degree_n(), std::move(values));
}

PayoffFn junta_payoff(const std::vector<JuntaTerm>& terms, std::size_t n, const Capacity& capacity) {
  capacity.check(n, "junta_payoff");
  for (const auto& term : terms) {
    std::vector<bool> seen_i(n, false), seen_j(n, false);
    for (auto [i, j] : term.constraints) {
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
        throw SpecError("junta: pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside 1.." + std::to_string(n));
      }
      if (seen_i[i - 1] || seen_j[j - 1]) {
        throw SpecError("junta: repeated point or image in a term");
      }
      seen_i[i - 1] = seen_j[j - 1] = true;
    }
  }
  const auto& group = SymmetricGroup::get(n);
  std::vector<double> values(group.order(), 0.0);
  for (Rank r = 0; r < group.order(); ++r) {
    const auto img = group.images(r);
    for (const auto& term : terms) {
      bool hit = true;
      for (auto [i, j] : term.constraints) hit = hit && img[i - 1] == j - 1;
      if (hit) values[r] += term.coefficient;
    }
  }
  return PayoffFn(n, std::move(values));
}

PayoffFn random_payoff(std::size_t n, std::uint64_t seed, RandomDist dist, const Capacity& capacity) {
  capacity.check(n, "random_payoff");
  Rng rng(seed);
  std::vector<double> values(factorial(n), 0.0);
  if (dist.kind == RandomDist::Kind::Uniform01) {
    for (double& v : values) v = rng.uniform01();
    return PayoffFn(n, std::move(values));
  }
  if (dist.k == 0 || dist.k > values.size()) {
    throw SpecError("random_payoff: sparse k must lie in 1..n!");
  }
  std::vector<Rank> positions(values.size());
  std::iota(positions.begin(), positions.end(), Rank{0});
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (std::size_t i = 0; i < dist.k; ++i) {
    const auto j = i + rng.below(positions.size() - i);
    std::swap(positions[i], positions[j]);
  }
  for (std::size_t i = 0; i < dist.k; ++i) values[positions[i]] = rng.uniform_open_closed();
  return PayoffFn(n, std::move(values));
}

}  // namespace mevfair
