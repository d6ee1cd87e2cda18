#include "mevfair/sequencing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mevfair/errors.hpp"
#include "mevfair/rng.hpp"

namespace mevfair {

void VoteProfile::validate() const {
  if (n_tx == 0) throw SpecError("vote profile: n_tx must be >= 1");
  if (validators.empty()) throw SpecError("vote profile: at least one validator is required");
  for (std::size_t v = 0; v < validators.size(); ++v) {
    if (validators[v].size() != n_tx) {
      throw DimensionError("vote profile: validator " + std::to_string(v) + " orders " +
                           std::to_string(validators[v].size()) + " transactions, expected " +
                           std::to_string(n_tx));
    }
  }
}

namespace {

// Tarjan's algorithm; components come out in reverse topological order.
class Tarjan {
 public:
  explicit Tarjan(const std::vector<std::vector<bool>>& edge)
      : edge_(edge), index_(edge.size(), -1), low_(edge.size(), 0), on_stack_(edge.size(), false) {
    for (std::size_t v = 0; v < edge.size(); ++v) {
      if (index_[v] < 0) visit(v);
    }
  }
  std::vector<std::vector<std::size_t>> components;

 private:
  void visit(std::size_t v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (std::size_t w = 0; w < edge_.size(); ++w) {
      if (!edge_[v][w]) continue;
      if (index_[w] < 0) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  }

  const std::vector<std::vector<bool>>& edge_;
  std::vector<long> index_;
  std::vector<long> low_;
  std::vector<bool> on_stack_;
  std::vector<std::size_t> stack_;
  long counter_ = 0;
};

}  // namespace

MajorityGraph majority_graph(const VoteProfile& v) {
  v.validate();
  const std::size_t n = v.n_tx;
  MajorityGraph g;
  g.n_tx = n;
  g.n_validators = v.validators.size();
  g.wins.assign(n, std::vector<std::size_t>(n, 0));
  g.edge.assign(n, std::vector<bool>(n, false));
  for (const auto& order : v.validators) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) ++g.wins[order(a)][order(b)];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.edge[i][j] = g.wins[i][j] > g.wins[j][i];
  }
  Tarjan tarjan(g.edge);
  g.sccs = std::move(tarjan.components);
  // Order components by their smallest transaction for stable output.
  std::sort(g.sccs.begin(), g.sccs.end());
  g.component.assign(n, 0);
  for (std::size_t c = 0; c < g.sccs.size(); ++c) {
    for (auto t : g.sccs[c]) g.component[t] = c;
  }
  return g;
}

OrderingSet valid_orderings(const MajorityGraph& g, const Capacity& capacity) {
  const std::size_t n = g.n_tx;
  capacity.check(n, "valid_orderings");
  std::vector<std::pair<std::size_t, std::size_t>> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.edge[i][j] && g.component[i] != g.component[j]) constraints.emplace_back(i, j);
    }
  }
  const auto& group = SymmetricGroup::get(n);
  std::vector<Rank> members;
  std::vector<std::size_t> slot_of(n);
  for (Rank r = 0; r < group.order(); ++r) {
    const auto img = group.images(r);
    for (std::size_t slot = 0; slot < n; ++slot) slot_of[img[slot]] = slot;
    if (std::all_of(constraints.begin(), constraints.end(),
                    [&](auto c) { return slot_of[c.first] < slot_of[c.second]; })) {
      members.push_back(r);
    }
  }
  return OrderingSet(n, std::move(members));
}

CondorcetStats condorcet_stats(const MajorityGraph& g) {
  CondorcetStats out;
  out.num_sccs = g.sccs.size();
  for (const auto& c : g.sccs) out.largest_scc = std::max(out.largest_scc, c.size());
  out.has_cycle = out.largest_scc >= 2;
  return out;
}

VoteProfile simulate(std::size_t n_tx, std::size_t n_validators, LatencyModel model,
                     const Capacity& capacity) {
  capacity.check(n_tx, "simulate");
  if (n_tx == 0 || n_validators == 0) {
    throw SpecError("simulate: n_tx and n_validators must be >= 1");
  }
  VoteProfile out;
  out.n_tx = n_tx;
  out.validators.reserve(n_validators);
  std::vector<std::uint8_t> order(n_tx);
  if (model.kind == LatencyModel::Kind::AdversarialCycle) {
    if (n_tx < 3 || n_validators % n_tx != 0) {
      throw SpecError("simulate: adversarial_cycle needs n_tx >= 3 and n_validators a multiple of n_tx");
    }
    for (std::size_t v = 0; v < n_validators; ++v) {
      for (std::size_t p = 0; p < n_tx; ++p) order[p] = static_cast<std::uint8_t>((v + p) % n_tx);
      out.validators.push_back(Permutation::from_images(order));
    }
    return out;
  }
  Rng rng(model.seed);
  for (std::size_t v = 0; v < n_validators; ++v) {
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    rng.shuffle(order.begin(), order.end());
    out.validators.push_back(Permutation::from_images(order));
  }
  return out;
}

}  // namespace mevfair
