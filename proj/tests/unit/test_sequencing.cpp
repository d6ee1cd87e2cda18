#include <doctest.h>

#include "mevfair/errors.hpp"
#include "mevfair/intersecting.hpp"
#include "mevfair/sequencing.hpp"

using namespace mevfair;

namespace {

VoteProfile profile(std::size_t n, std::vector<std::vector<int>> orders) {
  VoteProfile v{n, {}};
  for (const auto& o : orders) v.validators.push_back(Permutation::from_one_line(o));
  return v;
}

}  // namespace

TEST_CASE("majority graph") {
  const auto unanimous = majority_graph(profile(3, {{1, 2, 3}, {1, 2, 3}}));
  CHECK(unanimous.has_edge(0, 1));
  CHECK(unanimous.has_edge(0, 2));
  CHECK(unanimous.has_edge(1, 2));
  CHECK_FALSE(unanimous.has_edge(1, 0));
  CHECK(condorcet_stats(unanimous).num_sccs == 3);
  CHECK_FALSE(condorcet_stats(unanimous).has_cycle);

  const auto cycle = majority_graph(profile(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
  CHECK(cycle.has_edge(0, 1));
  CHECK(cycle.has_edge(1, 2));
  CHECK(cycle.has_edge(2, 0));
  const auto stats = condorcet_stats(cycle);
  CHECK(stats.num_sccs == 1);
  CHECK(stats.largest_scc == 3);
  CHECK(stats.has_cycle);

  const auto split = majority_graph(profile(3, {{1, 2, 3}, {3, 2, 1}}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK_FALSE(split.has_edge(i, j));
  }

  // Transaction 1 first everywhere, then a rotation of 2,3,4.
  const auto mixed = majority_graph(profile(4, {{1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}}));
  CHECK(condorcet_stats(mixed).num_sccs == 2);
  CHECK(mixed.sccs[0] == std::vector<std::size_t>{0});
  CHECK(mixed.sccs[1] == std::vector<std::size_t>{1, 2, 3});

  CHECK_THROWS_AS(majority_graph(VoteProfile{3, {}}), SpecError);
  CHECK_THROWS_AS(majority_graph(profile(3, {{1, 2}})), DimensionError);
}

TEST_CASE("valid orderings") {
  const auto unanimous = valid_orderings(majority_graph(profile(4, {{2, 1, 4, 3}})));
  REQUIRE(unanimous.size() == 1);
  CHECK(lehmer_unrank(4, unanimous.members()[0]).one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(intersection_profile(unanimous).t_max == 4);

  const auto cycle = valid_orderings(majority_graph(profile(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})));
  CHECK(cycle.size() == 6);
  CHECK(intersection_profile(cycle).t_max == 0);

  // Only 1 -> 2 is decided; every other pair is a 1-1 split.
  const auto partial = valid_orderings(majority_graph(profile(4, {{1, 2, 3, 4}, {4, 3, 1, 2}})));
  CHECK(partial.size() == 12);

  const auto mixed = valid_orderings(majority_graph(profile(4, {{1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}})));
  CHECK(mixed.size() == 6);

  // Brute-force check that each member respects each cross-SCC edge.
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = majority_graph(simulate(n, 5, LatencyModel::iid_shuffle(seed)));
      const auto a = valid_orderings(g);
      std::size_t expected = 0;
      for (const auto& p : enumerate(n)) {
        const auto inv = p.inverse();
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (g.has_edge(i, j) && g.component[i] != g.component[j]) ok = ok && inv(i) < inv(j);
          }
        }
        expected += ok;
        CHECK(a.contains(lehmer_rank(p)) == ok);
      }
      CHECK(a.size() == expected);
    }
  }
}

TEST_CASE("simulation") {
  const auto adv = simulate(3, 3, LatencyModel::adversarial_cycle());
  CHECK(adv.validators[0].one_line() == std::vector<int>{1, 2, 3});
  CHECK(adv.validators[1].one_line() == std::vector<int>{2, 3, 1});
  CHECK(adv.validators[2].one_line() == std::vector<int>{3, 1, 2});
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto g = majority_graph(simulate(n, 2 * n, LatencyModel::adversarial_cycle()));
    CHECK(condorcet_stats(g).num_sccs == 1);
  }
  CHECK_THROWS_AS(simulate(3, 4, LatencyModel::adversarial_cycle()), SpecError);
  CHECK_THROWS_AS(simulate(2, 2, LatencyModel::adversarial_cycle()), SpecError);

  const auto a = simulate(5, 7, LatencyModel::iid_shuffle(11));
  const auto b = simulate(5, 7, LatencyModel::iid_shuffle(11));
  REQUIRE(a.validators.size() == 7);
  for (std::size_t v = 0; v < 7; ++v) CHECK(a.validators[v] == b.validators[v]);
  CHECK_THROWS_AS(simulate(9, 3, LatencyModel::iid_shuffle(1)), CapacityError);
}
