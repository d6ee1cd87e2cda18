#include <doctest.h>

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "mevfair/cayley.hpp"
#include "mevfair/errors.hpp"
#include "mevfair/payoffs.hpp"
#include "mevfair/rng.hpp"

using namespace mevfair;

namespace {

SymmetricSet random_symmetric(std::size_t n, std::size_t draws, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rank> m;
  for (std::size_t i = 0; i < draws; ++i) m.push_back(rng.below(factorial(n)));
  return symmetrize(OrderingSet(n, m));
}

// Dense averaging operator built from Permutation arithmetic only.
Matrix operator_oracle(const SymmetricSet& f) {
  const std::size_t n = f.degree_n();
  const auto all = enumerate(n);
  const auto size = static_cast<Eigen::Index>(all.size());
  Matrix t = Matrix::Zero(size, size);
  for (std::size_t p = 0; p < all.size(); ++p) {
    for (Rank tau : f.members()) {
      const auto target = lehmer_rank(compose(lehmer_unrank(n, tau), all[p]));
      t(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(target)) +=
          1.0 / static_cast<double>(f.size());
    }
  }
  return t;
}

std::vector<double> sorted_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> s(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(s.eigenvalues().data(), s.eigenvalues().data() + m.rows());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("symmetrize") {
  const auto t = transpositions(4);
  CHECK(symmetrize(t.as_ordering_set()).members() == t.members());

  const auto cycle = lehmer_rank(Permutation::from_one_line({2, 3, 1}));
  const auto back = lehmer_rank(Permutation::from_one_line({3, 1, 2}));
  CHECK(symmetrize(OrderingSet(3, {cycle})).members() == std::vector<Rank>{std::min(cycle, back), std::max(cycle, back)});
  CHECK(symmetrize(OrderingSet(3, {0})).members() == std::vector<Rank>{0});

  CHECK_THROWS_AS(SymmetricSet(3, {cycle}), SpecError);
  CHECK_THROWS_AS(SymmetricSet(3, {}), EmptySetError);
  CHECK(transpositions(4).size() == 6);
}

TEST_CASE("block operators") {
  const SymmetricSet id(4, {0});
  for (const auto& shape : partitions_of(4)) {
    CHECK(block_operator(id, shape).isIdentity(1e-15));
  }

  const SymmetricSet everything(4, OrderingSet::all(4).members());
  for (const auto& shape : partitions_of(4)) {
    const Matrix b = block_operator(everything, shape);
    if (shape == Partition{4}) {
      CHECK(b(0, 0) == doctest::Approx(1.0));
    } else {
      CHECK(b.cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  // Transpositions at n = 3: the (2,1) block against the full operator.
  const auto t3 = transpositions(3);
  const Matrix b = block_operator(t3, Partition{2, 1});
  const auto block = sorted_eigenvalues(b);
  const auto full = sorted_eigenvalues(operator_oracle(t3));
  for (double mu : block) {
    const auto hits = std::count_if(full.begin(), full.end(), [&](double x) { return std::abs(x - mu) < 1e-10; });
    CHECK(hits >= 2);
  }
  CHECK_THROWS_AS(block_operator(t3, Partition{3, 1}), DimensionError);
}

TEST_CASE("spectrum reports") {
  const auto r = spectrum_report(SymmetricSet(5, {0}));
  CHECK(r.violations == 0);
  for (const auto& b : r.blocks) {
    CHECK(b.gram_eigenvalues.front() == doctest::Approx(1.0));
    CHECK(b.bound == doctest::Approx(120.0 / static_cast<double>(b.dimension)));
  }

  const auto swap12 = lehmer_rank(Permutation::from_one_line({2, 1, 3}));
  const auto two = spectrum_report(SymmetricSet(3, {0, swap12}));
  const auto& mid = two.blocks[1];
  REQUIRE(mid.shape == Partition{2, 1});
  CHECK(mid.gram_eigenvalues[0] == doctest::Approx(1.0));
  CHECK(std::abs(mid.gram_eigenvalues[1]) < 1e-12);
  CHECK(mid.bound == doctest::Approx(1.5));
  CHECK(mid.within_bound);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 3 + seed % 3;
    const auto f = random_symmetric(n, 1 + seed, seed);
    const auto rep = spectrum_report(f);
    CHECK(rep.violations == 0);
    CHECK(rep.blocks.front().operator_eigenvalues.front() == doctest::Approx(1.0));
    for (const auto& b : rep.blocks) {
      CHECK(b.operator_eigenvalues.front() <= 1.0 + 1e-12);
      CHECK(b.operator_eigenvalues.back() >= -1.0 - 1e-12);
    }
  }

  const auto adj = spectrum_report(transpositions(4), Normalization::Adjacency);
  CHECK(adj.blocks.front().gram_eigenvalues.front() == doctest::Approx(36.0));
}

TEST_CASE("full operator agrees with blocks") {
  for (std::size_t n = 3; n <= 4; ++n) {
    std::vector<SymmetricSet> families{SymmetricSet(n, {0}), transpositions(n)};
    for (std::uint64_t seed = 0; seed < 3; ++seed) families.push_back(random_symmetric(n, 3, seed));
    for (const auto& f : families) {
      CHECK((brute_force_operator(f) - operator_oracle(f)).cwiseAbs().maxCoeff() < 1e-15);
      const auto c = block_consistency(f);
      CHECK(c.multiset_size == factorial(n));
      CHECK(c.eigenvalue_residual <= 1e-8);
      CHECK(c.gram_residual <= 1e-8);
      CHECK(block_consistency(f, Normalization::Adjacency).gram_residual <= 1e-8);
    }
  }
  CHECK_THROWS_AS(brute_force_operator(SymmetricSet(7, {0})), CapacityError);
}

TEST_CASE("operator preserves isotypes") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_payoff(4, seed);
    CHECK(isotype_leakage(random_symmetric(4, 4, seed), f) <= 1e-9);
  }
}

TEST_CASE("gram application in the spectral domain") {
  const auto family = random_symmetric(4, 5, 3);
  const auto f = random_payoff(4, 9);
  const auto direct = apply_operator(family, apply_operator(family, f));
  const auto spectral = inverse(apply_gram(family, transform(f)));
  CHECK(max_abs_difference(direct, spectral) <= 1e-10);
}
