#include "mevfair/permutation.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "mevfair/errors.hpp"

namespace mevfair {

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw CapacityError("factorial overflows 64 bits for n > 20");
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void Capacity::check(std::size_t n, const char* operation) const {
  if (n > max_n || n > kEnumerationLimit) {
    throw CapacityError(std::string(operation) + ": n = " + std::to_string(n) +
                        " exceeds capacity guard " +
                        std::to_string(std::min(max_n, kEnumerationLimit)));
  }
}

namespace {

void require_bijection(const std::vector<std::uint8_t>& images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) {
      throw SpecError("not a permutation: images must be a bijection");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw SpecError("permutation degree must be >= 1");
  if (n > 255) throw CapacityError("permutation degree above 255");
  std::vector<std::uint8_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const int> one_line) {
  if (one_line.empty()) throw SpecError("permutation degree must be >= 1");
  if (one_line.size() > 255) throw CapacityError("permutation degree above 255");
  std::vector<std::uint8_t> images(one_line.size());
  for (std::size_t i = 0; i < one_line.size(); ++i) {
    const int v = one_line[i];
    if (v < 1 || static_cast<std::size_t>(v) > one_line.size()) {
      throw SpecError("one-line entry " + std::to_string(v) + " outside 1.." +
                      std::to_string(one_line.size()));
    }
    images[i] = static_cast<std::uint8_t>(v - 1);
  }
  require_bijection(images);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  if (images.empty()) throw SpecError("permutation degree must be >= 1");
  require_bijection(images);
  return Permutation(std::move(images));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const { return fixed_points() == images_.size(); }

std::size_t Permutation::fixed_points() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] == i;
  return c;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DimensionError("compose: degrees " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " differ");
  }
  std::vector<std::uint8_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = static_cast<std::uint8_t>(p(q(i)));
  return Permutation::from_images(std::move(out));
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

Rank lehmer_rank(std::span<const std::uint8_t> images) {
  const std::size_t n = images.size();
  Rank r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += images[j] < images[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

Rank lehmer_rank(const Permutation& p) { return lehmer_rank(p.images()); }

Permutation lehmer_unrank(std::size_t n, Rank r) {
  if (n == 0) throw SpecError("permutation degree must be >= 1");
  if (n > 20 || r >= factorial(n)) {
    throw IndexError("rank " + std::to_string(r) + " out of range for S_" + std::to_string(n));
  }
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    digits[i] = static_cast<std::uint8_t>(r % base);
    r /= base;
  }
  std::vector<std::uint8_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
  std::vector<std::uint8_t> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> enumerate(std::size_t n) {
  if (n == 0) throw SpecError("permutation degree must be >= 1");
  if (n > kEnumerationLimit) {
    throw CapacityError("enumerate: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(kEnumerationLimit));
  }
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  auto cur = Permutation::identity(n).one_line();
  do {
    out.push_back(Permutation::from_one_line(cur));
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

SymmetricGroup::SymmetricGroup(std::size_t n) : n_(n), order_(factorial(n)) {
  table_.resize(order_ * n_);
  inverse_.resize(order_);
  std::vector<std::uint8_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<std::uint8_t>(i);
  std::vector<std::uint8_t> inv(n);
  Rank r = 0;
  do {
    std::copy(cur.begin(), cur.end(), table_.begin() + static_cast<std::ptrdiff_t>(r * n));
    ++r;
  } while (std::next_permutation(cur.begin(), cur.end()));
  for (Rank k = 0; k < order_; ++k) {
    auto img = images(k);
    for (std::size_t i = 0; i < n; ++i) inv[img[i]] = static_cast<std::uint8_t>(i);
    inverse_[k] = static_cast<std::uint32_t>(lehmer_rank(inv));
  }
}

const SymmetricGroup& SymmetricGroup::get(std::size_t n) {
  if (n == 0) throw SpecError("permutation degree must be >= 1");
  if (n > kEnumerationLimit) {
    throw CapacityError("S_" + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(kEnumerationLimit));
  }
  static std::array<std::once_flag, kEnumerationLimit + 1> once;
  static std::array<std::unique_ptr<SymmetricGroup>, kEnumerationLimit + 1> groups;
  std::call_once(once[n], [n] { groups[n].reset(new SymmetricGroup(n)); });
  return *groups[n];
}

Permutation SymmetricGroup::element(Rank r) const {
  auto img = images(r);
  return Permutation::from_images({img.begin(), img.end()});
}

Rank SymmetricGroup::compose(Rank p, Rank q) const {
  auto pi = images(p);
  auto qi = images(q);
  std::vector<std::uint8_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = pi[qi[i]];
  return lehmer_rank(out);
}

}  // namespace mevfair
