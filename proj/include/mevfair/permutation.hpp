#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mevfair {

using Rank = std::uint64_t;

// Largest n for which S_n is ever materialized (10! = 3628800).
inline constexpr std::size_t kEnumerationLimit = 10;

// Default guard for n!-sized work (40320 permutations).
inline constexpr std::size_t kDefaultMaxN = 8;

std::uint64_t factorial(std::size_t n);

/// Upper bound on n accepted by operations that materialize functions on S_n.
struct Capacity {
  std::size_t max_n = kDefaultMaxN;
  // Throws CapacityError if n exceeds max_n or kEnumerationLimit.
  void check(std::size_t n, const char* operation) const;
};

/// Element of S_n stored in 0-based one-line notation: image(i) = pi(i).
///
/// Composition follows (p * q)(i) = p(q(i)); q acts first. The 1-based
/// one-line form is what users type and what JSON carries.
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  // Throws SpecError unless `one_line` is a bijection of {1..n}.
  static Permutation from_one_line(std::span<const int> one_line);
  static Permutation from_one_line(std::initializer_list<int> one_line) {
    return from_one_line(std::span<const int>(one_line.begin(), one_line.size()));
  }
  // 0-based images; throws SpecError unless a bijection of {0..n-1}.
  static Permutation from_images(std::vector<std::uint8_t> images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::uint8_t> images() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;
};

// result(i) = p(q(i)). Throws DimensionError on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

// Cycle lengths, descending.
std::vector<int> cycle_type(const Permutation& p);

// Position in the lexicographic order of one-line notations.
Rank lehmer_rank(const Permutation& p);
// Throws IndexError if r >= n!.
Permutation lehmer_unrank(std::size_t n, Rank r);

// All n! permutations in lexicographic order. Throws CapacityError past
// kEnumerationLimit.
std::vector<Permutation> enumerate(std::size_t n);

/// Flat table of S_n in Lehmer order with cached inverses; shared read-only
/// once built.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get(std::size_t n);

  std::size_t degree() const { return n_; }
  std::size_t order() const { return order_; }
  std::span<const std::uint8_t> images(Rank r) const {
    return {table_.data() + r * n_, n_};
  }
  Permutation element(Rank r) const;
  Rank inverse(Rank r) const { return inverse_[r]; }
  Rank compose(Rank p, Rank q) const;

 private:
  explicit SymmetricGroup(std::size_t n);
  std::size_t n_;
  std::size_t order_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint32_t> inverse_;
};

Rank lehmer_rank(std::span<const std::uint8_t> images);

}  // namespace mevfair
