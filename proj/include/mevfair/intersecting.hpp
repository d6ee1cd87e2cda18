#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mevfair/ordering_set.hpp"

namespace mevfair {

struct IntersectionProfile {
  // Least number of agreeing points over distinct pairs; n for a singleton.
  std::size_t t_max = 0;
  // 1-based (i, j) with pi(i) = j for every member.
  std::vector<std::pair<int, int>> common_pairs;
  std::size_t size = 0;
  bool size_gate = false;  // size >= (n - t_max)!
};

// Throws EmptySetError for an empty set.
IntersectionProfile intersection_profile(const OrderingSet& a);

struct IndicatorDegreeCheck {
  std::size_t t_max = 0;
  // min(t_max, n - 1). Agreement on n - 1 points forces agreement on all n, so
  // a singleton's t_max = n is compared through this value.
  std::size_t t_effective = 0;
  std::size_t deg_1a = 0;
  bool size_gate = false;
  bool claim_holds = false;  // !size_gate || deg_1a >= t_effective
};

IndicatorDegreeCheck verify_indicator_degree(const OrderingSet& a);

// {pi : pi(i) = j for each 1-based pair}. Throws SpecError on repeated i or j
// or points outside 1..n.
OrderingSet stabilizer_set(std::size_t n, const std::vector<std::pair<int, int>>& pairs,
                           const Capacity& capacity = {});

}  // namespace mevfair
