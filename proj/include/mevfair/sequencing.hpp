#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mevfair/ordering_set.hpp"
#include "mevfair/permutation.hpp"

namespace mevfair {

/// Receive orders reported by validators. Each order maps receive position
/// to transaction: order(p) is the transaction seen in position p.
struct VoteProfile {
  std::size_t n_tx = 0;
  std::vector<Permutation> validators;

  // Throws SpecError without validators, DimensionError on a size mismatch.
  void validate() const;
};

struct MajorityGraph {
  std::size_t n_tx = 0;
  std::size_t n_validators = 0;
  // wins[i][j]: validators placing transaction i before j (0-based).
  std::vector<std::vector<std::size_t>> wins;
  // edge[i][j] iff wins[i][j] > wins[j][i].
  std::vector<std::vector<bool>> edge;
  std::vector<std::size_t> component;            // SCC id per transaction
  std::vector<std::vector<std::size_t>> sccs;    // members per SCC, ascending

  bool has_edge(std::size_t i, std::size_t j) const { return edge[i][j]; }
};

MajorityGraph majority_graph(const VoteProfile& v);

// Orderings pi (slot -> transaction) that put i before j for every edge
// i -> j joining different SCCs.
OrderingSet valid_orderings(const MajorityGraph& g, const Capacity& capacity = {});

struct CondorcetStats {
  std::size_t num_sccs = 0;
  std::size_t largest_scc = 0;
  bool has_cycle = false;
};

CondorcetStats condorcet_stats(const MajorityGraph& g);

struct LatencyModel {
  enum class Kind { IidShuffle, AdversarialCycle };
  Kind kind = Kind::IidShuffle;
  std::uint64_t seed = 0;

  static LatencyModel iid_shuffle(std::uint64_t seed) { return {Kind::IidShuffle, seed}; }
  static LatencyModel adversarial_cycle() { return {Kind::AdversarialCycle, 0}; }
};

// IidShuffle draws each validator's order uniformly. AdversarialCycle gives
// validator v the rotation starting at transaction (v mod n_tx) + 1; it needs
// n_tx >= 3 and n_validators a multiple of n_tx so every rotation appears
// equally often, which puts all transactions in one SCC.
VoteProfile simulate(std::size_t n_tx, std::size_t n_validators, LatencyModel model,
                     const Capacity& capacity = {});

}  // namespace mevfair
