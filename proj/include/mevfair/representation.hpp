#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "mevfair/partition.hpp"
#include "mevfair/permutation.hpp"

namespace mevfair {

using Matrix = Eigen::MatrixXd;

/// Young's orthogonal form of the irreducible representation rho^lambda.
///
/// The basis is the standard tableaux of lambda in last-letter order. The
/// Coxeter generator s_k = (k, k+1) acts on a tableau T with axial distance
/// r = content(k+1) - content(k) as
///   rho(s_k) e_T = (1/r) e_T + sqrt(1 - 1/r^2) e_{s_k T},
/// the second term present only when s_k T is standard. Every matrix is real
/// orthogonal, so rho(pi^-1) = rho(pi)^T.
class YoungOrthogonalForm {
 public:
  explicit YoungOrthogonalForm(Partition shape);

  const Partition& shape() const { return shape_; }
  std::size_t degree() const { return shape_.size(); }
  std::size_t dimension() const { return tableaux_.size(); }
  const std::vector<StandardTableau>& basis() const { return tableaux_; }

  // Dense matrix of s_k for 1 <= k <= n-1; IndexError otherwise.
  Matrix adjacent_generator(std::size_t k) const;

  // rho(p), via a bubble-sort factorization of p into adjacent transpositions.
  Matrix evaluate(const Permutation& p) const;

  // m <- m * rho(s_k) and m <- rho(s_k) * m, with k 0-based (swaps k+1, k+2).
  void right_multiply_generator(Matrix& m, std::size_t k) const;
  void left_multiply_generator(Matrix& m, std::size_t k) const;

  // Visits (lehmer rank, rho(pi)) for every pi in S_n. Each matrix is derived
  // from a parent by one generator, so a full sweep costs O(n! d^2).
  void for_each_element(const std::function<void(Rank, const Matrix&)>& visit) const;

 private:
  struct GeneratorAction {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
    std::vector<long> partner;  // -1 when s_k T is not standard
  };

  Partition shape_;
  std::vector<StandardTableau> tableaux_;
  std::vector<GeneratorAction> generators_;
};

// Shared, lazily built form for the shape. Safe to call concurrently.
const YoungOrthogonalForm& irrep(const Partition& shape);

}  // namespace mevfair
