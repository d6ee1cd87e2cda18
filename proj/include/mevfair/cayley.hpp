#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mevfair/fourier.hpp"
#include "mevfair/ordering_set.hpp"

namespace mevfair {

/// Nonempty subset of S_n closed under inversion.
class SymmetricSet {
 public:
  // Throws SpecError if some member's inverse is missing, EmptySetError if
  // empty.
  SymmetricSet(std::size_t n, std::vector<Rank> members);

  std::size_t degree_n() const { return set_.degree_n(); }
  std::size_t size() const { return set_.size(); }
  const std::vector<Rank>& members() const { return set_.members(); }
  const OrderingSet& as_ordering_set() const { return set_; }

 private:
  OrderingSet set_;
};

SymmetricSet symmetrize(const OrderingSet& a);
SymmetricSet transpositions(std::size_t n);

// Averaging divides the sum over F by |F|; Adjacency keeps the raw sum.
enum class Normalization { Averaging, Adjacency };
const char* to_string(Normalization n);

// B = scale * sum_{tau in F} rho^lambda(tau): the operator
// (T f)(pi) = scale * sum_tau f(tau o pi) acting on the lambda isotype.
Matrix block_operator(const SymmetricSet& f, const Partition& shape,
                      Normalization norm = Normalization::Averaging);

struct BlockSpectrum {
  Partition shape;
  std::size_t dimension = 0;
  std::vector<double> operator_eigenvalues;  // of B, descending
  std::vector<double> gram_eigenvalues;      // of B^T B, descending
  double bound = 0;                          // n! / (|F| d_lambda)
  bool within_bound = false;                 // max gram eigenvalue <= bound + 1e-9
};

struct SpectrumReport {
  std::size_t n = 0;
  std::size_t family_size = 0;
  Normalization normalization = Normalization::Averaging;
  std::vector<BlockSpectrum> blocks;  // partitions_of(n) order
  std::size_t violations = 0;
};

SpectrumReport spectrum_report(const SymmetricSet& f, Normalization norm = Normalization::Averaging);

// (T f)(pi) = scale * sum_tau f(tau o pi), evaluated pointwise.
PayoffFn apply_operator(const SymmetricSet& family, const PayoffFn& f,
                        Normalization norm = Normalization::Averaging);

// Spectrum of T^T T g given the spectrum of g: each block M becomes B^T B M.
FourierSpectrum apply_gram(const SymmetricSet& family, const FourierSpectrum& g,
                           Normalization norm = Normalization::Averaging);

// Dense n! x n! matrix with T[pi][tau o pi] = scale. Throws CapacityError for
// n > max_n.
Matrix brute_force_operator(const SymmetricSet& family, Normalization norm = Normalization::Averaging,
                            const Capacity& capacity = Capacity{6});

struct BlockConsistency {
  double eigenvalue_residual = 0;  // max |sorted full - sorted block union|
  double gram_residual = 0;
  std::size_t multiset_size = 0;
};

// Compares the full operator's spectrum with the block spectra repeated d
// times each.
BlockConsistency block_consistency(const SymmetricSet& family,
                                   Normalization norm = Normalization::Averaging);

// max over lambda of || T f^{=lambda} - (T f^{=lambda})^{=lambda} ||_inf.
double isotype_leakage(const SymmetricSet& family, const PayoffFn& f);

}  // namespace mevfair
