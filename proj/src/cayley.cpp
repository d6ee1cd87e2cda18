#include "mevfair/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "mevfair/errors.hpp"
#include "parallel.hpp"

namespace mevfair {

namespace {

OrderingSet require_symmetric(std::size_t n, std::vector<Rank> members) {
  OrderingSet set(n, std::move(members));
  set.require_nonempty("symmetric set");
  const auto& group = SymmetricGroup::get(n);
  for (Rank r : set.members()) {
    if (!set.contains(group.inverse(r))) {
      throw SpecError("symmetric set: inverse of rank " + std::to_string(r) + " is missing");
    }
  }
  return set;
}

double scale_for(const SymmetricSet& f, Normalization norm) {
  return norm == Normalization::Averaging ? 1.0 / static_cast<double>(f.size()) : 1.0;
}

std::vector<double> descending_eigenvalues(const Matrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double max_sorted_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) throw DimensionError("spectrum sizes differ");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

SymmetricSet::SymmetricSet(std::size_t n, std::vector<Rank> members)
    : set_(require_symmetric(n, std::move(members))) {}

SymmetricSet symmetrize(const OrderingSet& a) {
  a.require_nonempty("symmetrize");
  const auto& group = SymmetricGroup::get(a.degree_n());
  std::vector<Rank> members = a.members();
  for (Rank r : a.members()) members.push_back(group.inverse(r));
  return SymmetricSet(a.degree_n(), std::move(members));
}

SymmetricSet transpositions(std::size_t n) {
  if (n < 2) throw SpecError("transpositions: need n >= 2");
  std::vector<Rank> members;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto one_line = Permutation::identity(n).one_line();
      std::swap(one_line[i], one_line[j]);
      members.push_back(lehmer_rank(Permutation::from_one_line(one_line)));
    }
  }
  return SymmetricSet(n, std::move(members));
}

const char* to_string(Normalization n) {
  return n == Normalization::Averaging ? "averaging" : "adjacency";
}

Matrix block_operator(const SymmetricSet& f, const Partition& shape, Normalization norm) {
  const std::size_t n = f.degree_n();
  if (shape.size() != n) {
    throw DimensionError("block_operator: shape " + shape.to_string() + " is not a partition of " +
                         std::to_string(n));
  }
  const auto& rep = irrep(shape);
  const auto d = static_cast<Eigen::Index>(rep.dimension());
  Matrix acc = Matrix::Zero(d, d);
  // Per-element evaluation costs ~n^2/2 generator steps; the sweep costs one
  // per element of S_n.
  if (f.size() * n * (n - 1) / 2 > factorial(n)) {
    const auto& set = f.as_ordering_set();
    rep.for_each_element([&](Rank r, const Matrix& m) {
      if (set.contains(r)) acc += m;
    });
  } else {
    const auto& group = SymmetricGroup::get(n);
    for (Rank r : f.members()) acc += rep.evaluate(group.element(r));
  }
  return scale_for(f, norm) * acc;
}

SpectrumReport spectrum_report(const SymmetricSet& f, Normalization norm) {
  const std::size_t n = f.degree_n();
  const auto shapes = partitions_of(n);
  SpectrumReport out;
  out.n = n;
  out.family_size = f.size();
  out.normalization = norm;
  for (const auto& shape : shapes) out.blocks.push_back(BlockSpectrum{shape, 0, {}, {}, 0, false});
  detail::parallel_for(shapes.size(), [&](std::size_t i) {
    const Matrix b = block_operator(f, shapes[i], norm);
    BlockSpectrum& s = out.blocks[i];
    s.dimension = static_cast<std::size_t>(b.rows());
    s.operator_eigenvalues = descending_eigenvalues(0.5 * (b + b.transpose()));
    s.gram_eigenvalues = descending_eigenvalues(b.transpose() * b);
    s.bound = static_cast<double>(factorial(n)) /
              (static_cast<double>(f.size()) * static_cast<double>(s.dimension));
    s.within_bound = s.gram_eigenvalues.front() <= s.bound + 1e-9;
  });
  for (const auto& b : out.blocks) out.violations += !b.within_bound;
  return out;
}

PayoffFn apply_operator(const SymmetricSet& family, const PayoffFn& f, Normalization norm) {
  if (family.degree_n() != f.degree_n()) throw DimensionError("apply_operator: degrees differ");
  const auto& group = SymmetricGroup::get(f.degree_n());
  const double scale = scale_for(family, norm);
  std::vector<double> out(f.size(), 0.0);
  detail::parallel_for(out.size(), [&](std::size_t pi) {
    double s = 0;
    for (Rank tau : family.members()) s += f[group.compose(tau, pi)];
    out[pi] = scale * s;
  });
  return PayoffFn(f.degree_n(), std::move(out));
}

FourierSpectrum apply_gram(const SymmetricSet& family, const FourierSpectrum& g, Normalization norm) {
  if (family.degree_n() != g.n) throw DimensionError("apply_gram: degrees differ");
  FourierSpectrum out = g;
  for (auto& block : out.blocks) {
    if (block.coefficients.isZero(0.0)) continue;
    const Matrix b = block_operator(family, block.shape, norm);
    block.coefficients = (b.transpose() * b) * block.coefficients;
  }
  return out;
}

Matrix brute_force_operator(const SymmetricSet& family, Normalization norm, const Capacity& capacity) {
  const std::size_t n = family.degree_n();
  capacity.check(n, "brute_force_operator");
  const auto& group = SymmetricGroup::get(n);
  const auto order = static_cast<Eigen::Index>(group.order());
  const double scale = scale_for(family, norm);
  Matrix t = Matrix::Zero(order, order);
  for (Rank pi = 0; pi < group.order(); ++pi) {
    for (Rank tau : family.members()) {
      t(static_cast<Eigen::Index>(pi), static_cast<Eigen::Index>(group.compose(tau, pi))) += scale;
    }
  }
  return t;
}

BlockConsistency block_consistency(const SymmetricSet& family, Normalization norm) {
  const Matrix t = brute_force_operator(family, norm);
  const auto full = descending_eigenvalues(t);
  const auto full_gram = descending_eigenvalues(t.transpose() * t);
  const auto report = spectrum_report(family, norm);
  std::vector<double> blocks, blocks_gram;
  for (const auto& b : report.blocks) {
    for (std::size_t copy = 0; copy < b.dimension; ++copy) {
      blocks.insert(blocks.end(), b.operator_eigenvalues.begin(), b.operator_eigenvalues.end());
      blocks_gram.insert(blocks_gram.end(), b.gram_eigenvalues.begin(), b.gram_eigenvalues.end());
    }
  }
  BlockConsistency out;
  out.multiset_size = blocks.size();
  out.eigenvalue_residual = max_sorted_gap(full, blocks);
  out.gram_residual = max_sorted_gap(full_gram, blocks_gram);
  return out;
}

double isotype_leakage(const SymmetricSet& family, const PayoffFn& f) {
  double worst = 0;
  for (const auto& shape : partitions_of(f.degree_n())) {
    const auto moved = apply_operator(family, isotypic_project(f, shape));
    worst = std::max(worst, max_abs_difference(moved, isotypic_project(moved, shape)));
  }
  return worst;
}

}  // namespace mevfair
