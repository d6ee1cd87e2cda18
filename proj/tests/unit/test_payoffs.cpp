#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mevfair/errors.hpp"
#include "mevfair/payoffs.hpp"

using namespace mevfair;

namespace {

std::size_t support(const PayoffFn& f) {
  return static_cast<std::size_t>(
      std::count_if(f.values().begin(), f.values().end(), [](double v) { return v != 0.0; }));
}

// Counts up/down step patterns whose running sum reaches -c, times the k!k!
// labelings of each pattern.
std::size_t liquidation_oracle(std::size_t k, int c) {
  std::size_t patterns = 0;
  const std::size_t n = 2 * k;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    int level = 0;
    bool hit = false;
    for (std::size_t i = 0; i < n; ++i) {
      level += (mask >> i & 1u) ? 1 : -1;
      hit = hit || level <= -c;
    }
    patterns += hit;
  }
  return patterns * factorial(k) * factorial(k);
}

}  // namespace

TEST_CASE("cfmm payoff") {
  CfmmModel flat{{1, 2, -1, -2}, 100, 0.0, 1.0};
  const auto f = cfmm_payoff(flat);
  for (double v : f.values()) CHECK(v == doctest::Approx(100.0 * 10.0));
  CHECK(degree(f) == 0);

  CfmmModel no_profit{{1, 2, -1, -2}, 100, 0.001, 0.0};
  CHECK(cfmm_payoff(no_profit).is_zero());

  // Frozen from a brute-force pass over the 24 orderings.
  CfmmModel m{{1, 2, -1, -2}, 100, 0.001, 1.0};
  const auto g = cfmm_payoff(m);
  const auto top = std::max_element(g.values().begin(), g.values().end());
  CHECK(*top == doctest::Approx(1001.7003996).epsilon(1e-12));
  CHECK(lehmer_unrank(4, static_cast<Rank>(top - g.values().begin())).one_line() ==
        std::vector<int>{1, 2, 4, 3});
  CHECK(*std::min_element(g.values().begin(), g.values().end()) ==
        doctest::Approx(998.3004004).epsilon(1e-12));
  for (double v : g.values()) CHECK(v >= 0.0);

  for (std::size_t n = 3; n <= 5; ++n) {
    CfmmModel distinct{{}, 50, 0.01, 1.0};
    for (std::size_t i = 0; i < n; ++i) distinct.deltas.push_back((i % 2 ? -1.0 : 1.0) * (i + 1));
    CHECK(degree(cfmm_payoff(distinct)) >= 1);
  }

  CHECK_THROWS_AS(cfmm_payoff(CfmmModel{{1, -2000}, 100, 0.001, 1}), SpecError);
  CHECK_THROWS_AS(cfmm_payoff(CfmmModel{{1, 2}, 0, 0.001, 1}), SpecError);
  CHECK_THROWS_AS(cfmm_payoff(CfmmModel{{1, 2}, 1, -0.1, 1}), SpecError);
  CHECK_THROWS_AS(cfmm_payoff(CfmmModel{std::vector<double>(9, 1.0), 1, 0, 1}), CapacityError);
}

TEST_CASE("liquidation payoff") {
  const auto f = liquidation_payoff({2, 1, 100});
  CHECK(f.size() == 24);
  CHECK(support(f) == 16);
  for (const auto& p : enumerate(4)) {
    if (p(0) >= 2) CHECK(f[lehmer_rank(p)] == 1.0);
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    for (int c = 1; c < static_cast<int>(k); ++c) {
      CHECK(support(liquidation_payoff({k, c, 100})) == liquidation_oracle(k, c));
    }
  }
  // c = k sits outside the model's range; the path count it would have is 4.
  CHECK(liquidation_oracle(2, 2) == 4);
  CHECK_THROWS_AS(liquidation_payoff({2, 2, 100}), SpecError);
  CHECK_THROWS_AS(liquidation_payoff({2, 0, 100}), SpecError);
}

TEST_CASE("indicator payoff") {
  CHECK(indicator_payoff(OrderingSet::all(3)).values() == std::vector<double>(6, 1.0));
  CHECK(indicator_payoff(OrderingSet::empty(3)).is_zero());
  const auto id = indicator_payoff(OrderingSet(3, {0}));
  CHECK(id[0] == 1.0);
  CHECK(support(id) == 1);
}

TEST_CASE("junta payoff") {
  CHECK(support(junta_payoff({{{{1, 1}}, 1.0}}, 4)) == 6);
  CHECK(support(junta_payoff({{{{1, 1}, {2, 2}}, 1.0}}, 4)) == 2);
  CHECK(junta_payoff({{{}, 2.5}}, 3).values() == std::vector<double>(6, 2.5));
  CHECK_THROWS_AS(junta_payoff({{{{1, 1}, {1, 2}}, 1.0}}, 4), SpecError);
  CHECK_THROWS_AS(junta_payoff({{{{1, 1}, {2, 1}}, 1.0}}, 4), SpecError);
  CHECK_THROWS_AS(junta_payoff({{{{5, 1}}, 1.0}}, 4), SpecError);

  // Term sums add.
  const auto two = junta_payoff({{{{1, 1}}, 1.0}, {{{1, 2}}, 2.0}}, 4);
  CHECK(support(two) == 12);

  for (std::size_t n = 5; n <= 6; ++n) {
    const std::vector<std::pair<int, int>> pool{{1, 2}, {3, 1}, {2, 4}};
    for (std::size_t k = 0; k <= 3; ++k) {
      JuntaTerm term{{pool.begin(), pool.begin() + static_cast<long>(k)}, 1.0};
      const auto d = degree(junta_payoff({term}, n, Capacity{6}));
      if (k <= 2) {
        CHECK(d == k);
      } else {
        CHECK(d <= k);
      }
    }
  }
}

TEST_CASE("random payoff") {
  const auto a = random_payoff(4, 7);
  CHECK(a.values() == random_payoff(4, 7).values());
  CHECK(a.values() != random_payoff(4, 8).values());
  for (double v : a.values()) CHECK((v >= 0.0 && v <= 1.0));

  const auto s1 = random_payoff(4, 3, RandomDist::sparse(1));
  CHECK(support(s1) == 1);
  CHECK(s1.norm_inf() > 0.0);
  CHECK(support(random_payoff(5, 3, RandomDist::sparse(17))) == 17);
  CHECK_THROWS_AS(random_payoff(3, 1, RandomDist::sparse(7)), SpecError);
}
