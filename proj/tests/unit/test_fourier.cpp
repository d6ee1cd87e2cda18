#include <doctest.h>

#include <cmath>

#include "mevfair/errors.hpp"
#include "mevfair/fourier.hpp"
#include "mevfair/rng.hpp"

using namespace mevfair;

namespace {

PayoffFn random_fn(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(factorial(n));
  for (double& x : v) x = rng.uniform01();
  return PayoffFn(n, std::move(v));
}

// Direct summation with per-element evaluation; shares no code with the sweep.
Matrix brute_force_block(const PayoffFn& f, const Partition& shape) {
  const auto& rep = irrep(shape);
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  Matrix acc = Matrix::Zero(d, d);
  const auto all = enumerate(f.degree_n());
  for (Rank r = 0; r < all.size(); ++r) acc += f[r] * rep.evaluate(all[r]);
  return acc;
}

double inner(const PayoffFn& a, const PayoffFn& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("payoff construction") {
  CHECK_THROWS_AS(PayoffFn(3, {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(PayoffFn(2, {1, NAN}), SpecError);
  CHECK(PayoffFn::constant(3, 2.0).mean() == 2.0);
}

TEST_CASE("transform matches direct summation") {
  const auto f = random_fn(4, 11);
  const auto spectrum = transform(f);
  for (const auto& b : spectrum.blocks) {
    CHECK((b.coefficients - brute_force_block(f, b.shape)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(transform(PayoffFn::constant(9, 1.0)), CapacityError);
  CHECK_NOTHROW(transform(PayoffFn::constant(3, 1.0), Capacity{3}));
}

TEST_CASE("transform of constants and deltas") {
  const std::size_t n = 4;
  const auto ones = transform(PayoffFn::constant(n, 1.0));
  for (const auto& b : ones.blocks) {
    if (b.shape == Partition{4}) {
      CHECK(b.coefficients(0, 0) == doctest::Approx(24.0));
    } else {
      CHECK(b.coefficients.cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  const auto at_id = transform(PayoffFn::delta(n, 0));
  for (const auto& b : at_id.blocks) {
    CHECK(b.coefficients.isIdentity(1e-14));
  }

  const Rank sigma = 17;
  const auto at_sigma = transform(PayoffFn::delta(n, sigma));
  for (const auto& b : at_sigma.blocks) {
    CHECK((b.coefficients - irrep(b.shape).evaluate(lehmer_unrank(n, sigma))).norm() < 1e-12);
  }
  for (const auto& [shape, sv] : schatten_summary(at_sigma).per_block) {
    CHECK((sv.array() - 1.0).abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("inversion round trip") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_fn(5, seed);
    CHECK(max_abs_difference(inverse(transform(f)), f) <= 1e-9);
  }
  const auto d = PayoffFn::delta(4, 9);
  CHECK(max_abs_difference(inverse(transform(d)), d) <= 1e-12);

  auto zero = transform(PayoffFn::constant(4, 1.0));
  for (auto& b : zero.blocks) b.coefficients.setZero();
  CHECK(inverse(zero).is_zero());

  auto broken = transform(PayoffFn::constant(3, 1.0));
  broken.blocks.pop_back();
  CHECK_THROWS_AS(inverse(broken), DimensionError);
}

TEST_CASE("plancherel") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = random_fn(n, 100 + n);
    const double direct = f.norm2_squared();
    CHECK(std::abs(spectral_energy(transform(f)) - direct) / direct <= 1e-9);
  }
}

TEST_CASE("linearity and left translation") {
  const std::size_t n = 4;
  const auto f = random_fn(n, 5);
  const auto g = random_fn(n, 6);
  const auto fg = transform(f.scaled(2.0) + g);
  const auto ff = transform(f);
  const auto gg = transform(g);
  for (std::size_t i = 0; i < fg.blocks.size(); ++i) {
    CHECK((fg.blocks[i].coefficients - 2.0 * ff.blocks[i].coefficients - gg.blocks[i].coefficients)
              .norm() < 1e-11);
  }

  // (delta_sigma * f)(pi) = f(sigma^-1 pi) transforms to rho(sigma) F.
  const auto& group = SymmetricGroup::get(n);
  const Rank sigma = 13;
  std::vector<double> shifted(f.size());
  for (Rank r = 0; r < f.size(); ++r) shifted[r] = f[group.compose(group.inverse(sigma), r)];
  const auto conv = transform(PayoffFn(n, shifted));
  for (std::size_t i = 0; i < conv.blocks.size(); ++i) {
    const auto rs = irrep(conv.blocks[i].shape).evaluate(group.element(sigma));
    CHECK((conv.blocks[i].coefficients - rs * ff.blocks[i].coefficients).norm() < 1e-11);
  }
}

TEST_CASE("isotypic projections") {
  const std::size_t n = 4;
  const auto c = PayoffFn::constant(n, 3.0);
  for (const auto& l : partitions_of(n)) {
    const auto p = isotypic_project(c, l);
    if (l == Partition{4}) {
      CHECK(max_abs_difference(p, c) < 1e-12);
    } else {
      CHECK(p.norm_inf() < 1e-12);
    }
  }

  const auto f = random_fn(n, 77);
  const auto shapes = partitions_of(n);
  std::vector<PayoffFn> parts;
  auto total = PayoffFn::constant(n, 0.0);
  for (const auto& l : shapes) {
    parts.push_back(isotypic_project(f, l));
    total = total + parts.back();
  }
  CHECK(max_abs_difference(total, f) <= 1e-9);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      CHECK(std::abs(inner(parts[a], parts[b])) <= 1e-9);
    }
  }
  // Projection through a precomputed spectrum agrees.
  const auto spectrum = transform(f);
  CHECK(max_abs_difference(isotypic_project(spectrum, Partition{2, 2}), parts[2]) < 1e-12);
  CHECK_THROWS_AS(isotypic_project(f, Partition{3, 2}), DimensionError);
}

TEST_CASE("degree") {
  CHECK(degree(PayoffFn::constant(4, 2.5)) == 0);
  CHECK(degree(PayoffFn::delta(4, 0)) == 3);

  std::vector<double> fixes_one(24, 0.0);
  for (const auto& p : enumerate(4)) {
    if (p(0) == 0) fixes_one[lehmer_rank(p)] = 1.0;
  }
  CHECK(degree(PayoffFn(4, fixes_one)) == 1);
  CHECK_THROWS_AS(degree(PayoffFn::constant(4, 0.0)), DegenerateError);
}

TEST_CASE("truncations") {
  const auto f = random_fn(4, 3);
  const auto low0 = truncate_low(f, 0);
  for (double v : low0.values()) CHECK(v == doctest::Approx(f.mean()).epsilon(1e-12));
  CHECK(max_abs_difference(truncate_low(f, 1) + truncate_high(f, 1), f) <= 1e-9);
  CHECK(max_abs_difference(truncate_low(f, 3), f) <= 1e-9);
  CHECK_THROWS_AS(truncate_low(f, 4), IndexError);

  const auto g = random_fn(5, 4);
  CHECK(degree(truncate_low(g, 2)) <= 2);
  CHECK(degree(truncate_high(g, 2)) == 4);

  const auto spectrum = transform(g);
  CHECK(max_abs_difference(level_band(spectrum, 0, 2), truncate_low(g, 2) - truncate_low(g, 0)) <
        1e-10);
}

TEST_CASE("schatten summaries") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const double order = static_cast<double>(factorial(n));
    const auto d = schatten_summary(transform(PayoffFn::delta(n, 1)));
    CHECK(d.s1 == doctest::Approx(order).epsilon(1e-12));
    CHECK(d.sinf == doctest::Approx(1.0).epsilon(1e-12));
    const auto c = schatten_summary(transform(PayoffFn::constant(n, 1.0)));
    CHECK(c.s1 == doctest::Approx(order).epsilon(1e-12));
    CHECK(c.sinf == doctest::Approx(order).epsilon(1e-12));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = schatten_summary(transform(random_fn(4, seed)));
    CHECK(s.sinf <= s.s1);
    CHECK(s.concentration() == doctest::Approx(1.0 / s.spread()));
    for (const auto& [shape, sv] : s.per_block) CHECK(sv.minCoeff() >= 0.0);
  }
}

TEST_CASE("uncertainty principle") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const double order = static_cast<double>(factorial(n));
    const auto d = uncertainty_check(PayoffFn::delta(n, 3 % factorial(n)));
    CHECK(d.product == doctest::Approx(order).epsilon(1e-12));
    CHECK(d.holds);
    const auto c = uncertainty_check(PayoffFn::constant(n, 1.0));
    CHECK(c.product == doctest::Approx(order).epsilon(1e-12));
    CHECK(c.holds);
  }
  int holds = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) holds += uncertainty_check(random_fn(4, seed)).holds;
  CHECK(holds == 100);

  // Signed functions obey the same inequality.
  auto signed_fn = random_fn(4, 1234) - PayoffFn::constant(4, 0.5);
  CHECK(uncertainty_check(signed_fn).holds);
  CHECK_THROWS_AS(uncertainty_check(PayoffFn::constant(3, 0.0)), DegenerateError);
}
