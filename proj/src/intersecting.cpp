#include "mevfair/intersecting.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "mevfair/errors.hpp"
#include "mevfair/fourier.hpp"
#include "mevfair/payoffs.hpp"
#include "parallel.hpp"

namespace mevfair {

namespace {

constexpr std::size_t kBucketThreshold = 1000;

std::size_t agreements(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                       std::size_t stop_at) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size() && c < stop_at; ++i) c += a[i] == b[i];
  return c;
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  auto cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Minimum agreement over pairs (i, j), i < j, accepted by `keep`.
template <class Keep>
void scan_pairs(const std::vector<std::span<const std::uint8_t>>& rows, std::atomic<std::size_t>& best,
                Keep keep) {
  detail::parallel_for(rows.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto bound = best.load(std::memory_order_relaxed);
      if (bound == 0) return;
      if (!keep(i, j)) continue;
      atomic_min(best, agreements(rows[i], rows[j], bound));
    }
  });
}

}  // namespace

IntersectionProfile intersection_profile(const OrderingSet& a) {
  a.require_nonempty("intersection_profile");
  const std::size_t n = a.degree_n();
  const auto& group = SymmetricGroup::get(n);
  std::vector<std::span<const std::uint8_t>> rows;
  rows.reserve(a.size());
  for (Rank r : a.members()) rows.push_back(group.images(r));

  IntersectionProfile out;
  out.size = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = rows.front()[i];
    if (std::all_of(rows.begin(), rows.end(), [&](auto row) { return row[i] == j; })) {
      out.common_pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  }

  std::atomic<std::size_t> best{n};
  if (rows.size() > kBucketThreshold) {
    // Pairs sharing the image of point 1 agree somewhere, so once a
    // cross-bucket pair reaches <= 1 the within-bucket pairs cannot lower it.
    scan_pairs(rows, best, [&](std::size_t i, std::size_t j) { return rows[i][0] != rows[j][0]; });
    if (best.load() > 1) {
      scan_pairs(rows, best, [&](std::size_t i, std::size_t j) { return rows[i][0] == rows[j][0]; });
    }
  } else {
    scan_pairs(rows, best, [](std::size_t, std::size_t) { return true; });
  }
  out.t_max = best.load();
  out.size_gate = out.size >= factorial(n - out.t_max);
  return out;
}

IndicatorDegreeCheck verify_indicator_degree(const OrderingSet& a) {
  const auto profile = intersection_profile(a);
  IndicatorDegreeCheck out;
  out.t_max = profile.t_max;
  out.t_effective = std::min(profile.t_max, a.degree_n() - 1);
  out.deg_1a = degree(indicator_payoff(a));
  out.size_gate = profile.size_gate;
  out.claim_holds = !out.size_gate || out.deg_1a >= out.t_effective;
  return out;
}

OrderingSet stabilizer_set(std::size_t n, const std::vector<std::pair<int, int>>& pairs,
                           const Capacity& capacity) {
  capacity.check(n, "stabilizer_set");
  std::vector<bool> seen_i(n, false), seen_j(n, false);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n) {
      throw SpecError("stabilizer: pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside 1.." + std::to_string(n));
    }
    if (seen_i[i - 1] || seen_j[j - 1]) {
      throw SpecError("stabilizer: constraints repeat a point or an image");
    }
    seen_i[i - 1] = seen_j[j - 1] = true;
  }
  const auto& group = SymmetricGroup::get(n);
  std::vector<Rank> members;
  members.reserve(factorial(n - pairs.size()));
  for (Rank r = 0; r < group.order(); ++r) {
    const auto img = group.images(r);
    if (std::all_of(pairs.begin(), pairs.end(),
                    [&](auto p) { return img[p.first - 1] == p.second - 1; })) {
      members.push_back(r);
    }
  }
  return OrderingSet(n, std::move(members));
}

}  // namespace mevfair
