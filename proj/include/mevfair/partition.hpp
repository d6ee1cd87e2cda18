#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mevfair {

/// Integer partition of n with parts in non-increasing order. Keys the
/// irreducible representations of S_n.
class Partition {
 public:
  // Throws SpecError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return n_; }
  std::size_t rows() const { return parts_.size(); }
  int operator[](std::size_t row) const { return parts_[row]; }
  // n - lambda_1: the "level" of the isotype.
  std::size_t level() const { return n_ - static_cast<std::size_t>(parts_.front()); }
  std::string to_string() const;  // "3,1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  std::size_t n_ = 0;
};

// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(std::size_t n);

// Number of standard tableaux of the shape, via the hook length formula.
std::uint64_t dim(const Partition& shape);

// C(n, lambda_1) * sqrt((n - lambda_1)!), an upper bound on dim.
double dim_upper_bound(const Partition& shape);

std::uint64_t binomial(std::size_t n, std::size_t k);

/// Standard filling of a Young diagram. Rows and columns of each value are
/// cached because the orthogonal form only ever asks "where is k?".
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_of(int value) const { return row_of_[static_cast<std::size_t>(value - 1)]; }
  int col_of(int value) const { return col_of_[static_cast<std::size_t>(value - 1)]; }
  // col - row of the box holding `value`.
  int content(int value) const { return col_of(value) - row_of(value); }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
  std::vector<int> col_of_;
};

// Last-letter order: sorted by the row holding n (top row first), ties broken
// by the row holding n-1, and so on.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

}  // namespace mevfair
