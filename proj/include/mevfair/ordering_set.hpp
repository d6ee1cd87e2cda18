#pragma once

#include <cstddef>
#include <vector>

#include "mevfair/permutation.hpp"

namespace mevfair {

/// Subset of S_n held as strictly increasing Lehmer ranks.
class OrderingSet {
 public:
  // Sorts and deduplicates; throws IndexError for ranks >= n!.
  OrderingSet(std::size_t n, std::vector<Rank> members);
  static OrderingSet all(std::size_t n);
  static OrderingSet empty(std::size_t n) { return OrderingSet(n, {}); }

  std::size_t degree_n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  const std::vector<Rank>& members() const { return members_; }
  bool contains(Rank r) const;

  // Throws EmptySetError naming `operation` when the set is empty.
  void require_nonempty(const char* operation) const;

  friend bool operator==(const OrderingSet&, const OrderingSet&) = default;

 private:
  std::size_t n_;
  std::vector<Rank> members_;
};

}  // namespace mevfair
