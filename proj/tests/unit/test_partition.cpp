#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mevfair/errors.hpp"
#include "mevfair/partition.hpp"
#include "mevfair/permutation.hpp"

using namespace mevfair;

namespace {

// p(n) by the parts-at-most-k recurrence.
std::uint64_t partition_count(std::size_t n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

// Counts standard fillings by trying every assignment of 1..n to the boxes.
std::size_t brute_force_tableaux(const Partition& shape) {
  const std::size_t n = shape.size();
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::size_t count = 0;
  do {
    std::size_t at = 0;
    std::vector<std::vector<int>> rows;
    for (int len : shape.parts()) {
      rows.emplace_back(values.begin() + static_cast<long>(at),
                        values.begin() + static_cast<long>(at + static_cast<std::size_t>(len)));
      at += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    }
    count += ok;
  } while (std::next_permutation(values.begin(), values.end()));
  return count;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), SpecError);
  CHECK_THROWS_AS(Partition({2, 0}), SpecError);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), SpecError);
  CHECK(Partition({3, 1}).to_string() == "3,1");
  CHECK(Partition({3, 1}).level() == 1);
}

TEST_CASE("partitions_of order and counts") {
  CHECK(partitions_of(1) == std::vector<Partition>{Partition{1}});
  CHECK(partitions_of(4) == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                                   Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
  CHECK(partitions_of(6).size() == 11);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto all = partitions_of(n);
    CHECK(all.size() == partition_count(n));
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
  }
}

TEST_CASE("partitions with first part n-i are counted by p(i)") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto all = partitions_of(n);
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const auto c = std::count_if(all.begin(), all.end(),
                                   [&](const Partition& l) { return l.level() == i; });
      CHECK(static_cast<std::uint64_t>(c) == partition_count(i));
    }
  }
}

TEST_CASE("hook length dimensions") {
  CHECK(dim(Partition{5}) == 1);
  CHECK(dim(Partition{1, 1, 1, 1, 1}) == 1);
  CHECK(dim(Partition{2, 1}) == 2);
  CHECK(dim(Partition{3, 1}) == 3);
  CHECK(dim(Partition{2, 2}) == 2);
  CHECK(dim(Partition{4, 2, 1, 1}) == 90);
  for (std::size_t n = 1; n <= 10; ++n) {
    std::uint64_t sum = 0;
    for (const auto& l : partitions_of(n)) sum += dim(l) * dim(l);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("dimension upper bound") {
  CHECK(dim_upper_bound(Partition{4}) == doctest::Approx(1.0));
  CHECK(dim_upper_bound(Partition{3, 1}) == doctest::Approx(4.0));
  CHECK(dim_upper_bound(Partition{2, 2}) == doctest::Approx(6.0 * std::sqrt(2.0)));
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(static_cast<double>(dim(l)) <= dim_upper_bound(l) + 1e-9);
    }
  }
}

TEST_CASE("standard tableaux enumeration") {
  CHECK(standard_tableaux(Partition{4}).size() == 1);
  CHECK(standard_tableaux(Partition{2, 1}).size() == 2);
  CHECK(standard_tableaux(Partition{2, 2}).size() == 2);

  const auto t21 = standard_tableaux(Partition{2, 1});
  // 3 in the top row first.
  CHECK(t21[0].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(t21[1].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});

  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& l : partitions_of(n)) {
      const auto tabs = standard_tableaux(l);
      CHECK(tabs.size() == dim(l));
      CHECK(tabs.size() == brute_force_tableaux(l));
    }
  }
  for (const auto& l : partitions_of(8)) CHECK(standard_tableaux(l).size() == dim(l));
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(StandardTableau(Partition{2, 1}, {{2, 1}, {3}}), SpecError);
  CHECK_THROWS_AS(StandardTableau(Partition{2, 1}, {{1, 2}, {2}}), SpecError);
  const StandardTableau t(Partition{2, 1}, {{1, 2}, {3}});
  CHECK(t.content(2) == 1);
  CHECK(t.content(3) == -1);
}
