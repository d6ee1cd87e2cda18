#include "mevfair/representation.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "mevfair/errors.hpp"

namespace mevfair {

YoungOrthogonalForm::YoungOrthogonalForm(Partition shape)
    : shape_(std::move(shape)), tableaux_(standard_tableaux(shape_)) {
  std::map<std::vector<std::vector<int>>, long> index;
  for (std::size_t t = 0; t < tableaux_.size(); ++t) {
    index.emplace(tableaux_[t].rows(), static_cast<long>(t));
  }
  const std::size_t n = shape_.size();
  const std::size_t d = tableaux_.size();
  generators_.resize(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto& g = generators_[k];
    g.diagonal.resize(d);
    g.off_diagonal.assign(d, 0.0);
    g.partner.assign(d, -1);
    const int a = static_cast<int>(k) + 1;
    const int b = a + 1;
    for (std::size_t t = 0; t < d; ++t) {
      const auto& tab = tableaux_[t];
      const int r = tab.content(b) - tab.content(a);
      g.diagonal[t] = 1.0 / r;
      if (r == 1 || r == -1) continue;
      auto swapped = tab.rows();
      std::swap(swapped[static_cast<std::size_t>(tab.row_of(a))][static_cast<std::size_t>(tab.col_of(a))],
                swapped[static_cast<std::size_t>(tab.row_of(b))][static_cast<std::size_t>(tab.col_of(b))]);
      g.partner[t] = index.at(swapped);
      g.off_diagonal[t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
    }
  }
}

Matrix YoungOrthogonalForm::adjacent_generator(std::size_t k) const {
  if (k < 1 || k >= degree()) {
    throw IndexError("generator index " + std::to_string(k) + " outside 1.." +
                     std::to_string(degree() - 1));
  }
  Matrix m = Matrix::Identity(static_cast<Eigen::Index>(dimension()),
                              static_cast<Eigen::Index>(dimension()));
  left_multiply_generator(m, k - 1);
  return m;
}

void YoungOrthogonalForm::right_multiply_generator(Matrix& m, std::size_t k) const {
  const auto& g = generators_[k];
  for (std::size_t t = 0; t < g.diagonal.size(); ++t) {
    const long p = g.partner[t];
    const auto ti = static_cast<Eigen::Index>(t);
    if (p < 0) {
      m.col(ti) *= g.diagonal[t];
    } else if (static_cast<std::size_t>(p) > t) {
      const auto pi = static_cast<Eigen::Index>(p);
      Eigen::VectorXd ct = m.col(ti);
      m.col(ti) = g.diagonal[t] * ct + g.off_diagonal[t] * m.col(pi);
      m.col(pi) = g.diagonal[static_cast<std::size_t>(p)] * m.col(pi) + g.off_diagonal[t] * ct;
    }
  }
}

void YoungOrthogonalForm::left_multiply_generator(Matrix& m, std::size_t k) const {
  const auto& g = generators_[k];
  for (std::size_t t = 0; t < g.diagonal.size(); ++t) {
    const long p = g.partner[t];
    const auto ti = static_cast<Eigen::Index>(t);
    if (p < 0) {
      m.row(ti) *= g.diagonal[t];
    } else if (static_cast<std::size_t>(p) > t) {
      const auto pi = static_cast<Eigen::Index>(p);
      Eigen::RowVectorXd rt = m.row(ti);
      m.row(ti) = g.diagonal[t] * rt + g.off_diagonal[t] * m.row(pi);
      m.row(pi) = g.diagonal[static_cast<std::size_t>(p)] * m.row(pi) + g.off_diagonal[t] * rt;
    }
  }
}

Matrix YoungOrthogonalForm::evaluate(const Permutation& p) const {
  if (p.size() != degree()) {
    throw DimensionError("evaluate: permutation of degree " + std::to_string(p.size()) +
                         " against shape of size " + std::to_string(degree()));
  }
  const auto d = static_cast<Eigen::Index>(dimension());
  Matrix m = Matrix::Identity(d, d);
  std::vector<std::uint8_t> w(p.images().begin(), p.images().end());
  // p * s_{a1} * ... * s_{am} = id, hence rho(p) = rho(s_am) ... rho(s_a1).
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        left_multiply_generator(m, k);
        swapped = true;
      }
    }
  }
  return m;
}

namespace {

std::size_t first_descent(const std::vector<std::uint8_t>& w) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j] > w[j + 1]) return j;
  }
  return w.size();
}

}  // namespace

void YoungOrthogonalForm::for_each_element(
    const std::function<void(Rank, const Matrix&)>& visit) const {
  const std::size_t n = degree();
  const auto d = static_cast<Eigen::Index>(dimension());
  const std::size_t max_depth = n * (n - 1) / 2;
  std::vector<Matrix> stack(max_depth + 1, Matrix(d, d));
  stack[0].setIdentity();
  std::vector<std::uint8_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(i);

  // Spanning tree of the weak order: the parent of pi is pi * s_j with j the
  // first descent of pi, so each child pi = sigma * s_k must have first
  // descent exactly k.
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    visit(lehmer_rank(w), stack[depth]);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (w[k] > w[k + 1]) continue;
      std::swap(w[k], w[k + 1]);
      if (first_descent(w) == k) {
        stack[depth + 1] = stack[depth];
        right_multiply_generator(stack[depth + 1], k);
        descend(depth + 1);
      }
      std::swap(w[k], w[k + 1]);
    }
  };
  descend(0);
}

const YoungOrthogonalForm& irrep(const Partition& shape) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::unique_ptr<YoungOrthogonalForm>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(shape);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<YoungOrthogonalForm>(shape);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(shape, std::move(built));
  return *it->second;
}

}  // namespace mevfair
