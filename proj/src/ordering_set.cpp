#include "mevfair/ordering_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mevfair/errors.hpp"

namespace mevfair {

OrderingSet::OrderingSet(std::size_t n, std::vector<Rank> members)
    : n_(n), members_(std::move(members)) {
  if (n == 0) throw SpecError("ordering set: n must be >= 1");
  if (n > kEnumerationLimit) {
    throw CapacityError("ordering set: n = " + std::to_string(n) + " exceeds enumeration limit");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const Rank order = factorial(n);
  if (!members_.empty() && members_.back() >= order) {
    throw IndexError("ordering set: rank " + std::to_string(members_.back()) +
                     " out of range for S_" + std::to_string(n));
  }
}

OrderingSet OrderingSet::all(std::size_t n) {
  std::vector<Rank> m(factorial(n));
  std::iota(m.begin(), m.end(), Rank{0});
  return OrderingSet(n, std::move(m));
}

bool OrderingSet::contains(Rank r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

void OrderingSet::require_nonempty(const char* operation) const {
  if (members_.empty()) throw EmptySetError(std::string(operation) + ": ordering set is empty");
}

}  // namespace mevfair
