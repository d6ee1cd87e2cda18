#include "mevfair/partition.hpp"

#include <cmath>
#include <numeric>

#include "mevfair/errors.hpp"
#include "mevfair/permutation.hpp"

namespace mevfair {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw SpecError("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw SpecError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw SpecError("partition parts must be non-increasing");
    }
    n_ += static_cast<std::size_t>(parts_[i]);
  }
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
  if (n == 0) throw SpecError("partitions_of: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(static_cast<int>(n), static_cast<int>(n), cur, out);
  return out;
}

std::uint64_t dim(const Partition& shape) {
  const auto parts = shape.parts();
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      hooks *= static_cast<std::uint64_t>(parts[r] - c + below);
    }
  }
  return factorial(shape.size()) / hooks;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double dim_upper_bound(const Partition& shape) {
  const std::size_t n = shape.size();
  const auto first = static_cast<std::size_t>(shape[0]);
  return static_cast<double>(binomial(n, first)) *
         std::sqrt(static_cast<double>(factorial(n - first)));
}

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const std::size_t n = shape_.size();
  row_of_.assign(n, -1);
  col_of_.assign(n, -1);
  if (rows_.size() != shape_.rows()) throw SpecError("tableau rows do not match shape");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != static_cast<std::size_t>(shape_[r])) {
      throw SpecError("tableau row length does not match shape");
    }
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || static_cast<std::size_t>(v) > n || row_of_[v - 1] != -1) {
        throw SpecError("tableau entries must be 1..n, each once");
      }
      if ((c > 0 && rows_[r][c - 1] >= v) || (r > 0 && rows_[r - 1][c] >= v)) {
        throw SpecError("tableau must increase along rows and columns");
      }
      row_of_[v - 1] = static_cast<int>(r);
      col_of_[v - 1] = static_cast<int>(c);
    }
  }
}

namespace {

// Fills values 1..m into `rows` (shape `parts`) by peeling the largest value
// off each removable corner, top row first.
void tableaux_rec(std::vector<int>& parts, int m, std::vector<std::vector<int>>& rows,
                  const Partition& shape, std::vector<StandardTableau>& out) {
  if (m == 0) {
    out.emplace_back(shape, rows);
    return;
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const bool corner = parts[r] > 0 && (r + 1 == parts.size() || parts[r + 1] < parts[r]);
    if (!corner) continue;
    --parts[r];
    rows[r][static_cast<std::size_t>(parts[r])] = m;
    tableaux_rec(parts, m - 1, rows, shape, out);
    ++parts[r];
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  std::vector<std::vector<int>> rows(parts.size());
  for (std::size_t r = 0; r < parts.size(); ++r) rows[r].assign(static_cast<std::size_t>(parts[r]), 0);
  std::vector<StandardTableau> out;
  tableaux_rec(parts, static_cast<int>(shape.size()), rows, shape, out);
  return out;
}

}  // namespace mevfair
