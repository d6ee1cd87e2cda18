#include "mevfair/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "mevfair/errors.hpp"
#include "mevfair/rng.hpp"

namespace mevfair {

namespace {

class Checks {
 public:
  void theorem(const std::string& name, bool ok, Json detail) { add(name, "theorem", ok, std::move(detail)); }
  void trend(const std::string& name, bool ok, Json detail) { add(name, "trend", ok, std::move(detail)); }

  bool passed() const { return passed_; }
  Json take() { return std::move(list_); }

 private:
  void add(const std::string& name, const char* kind, bool ok, Json detail) {
    list_.push_back({{"name", name}, {"kind", kind}, {"passed", ok}, {"detail", std::move(detail)}});
    if (std::string(kind) == "theorem") passed_ = passed_ && ok;
  }
  Json list_ = Json::array();
  bool passed_ = true;
};

std::size_t or_default(std::size_t count, std::size_t fallback) { return count ? count : fallback; }

// Every stabilizer constraint list with t pairs: increasing points, injective
// images.
void for_each_constraint_list(std::size_t n, std::size_t t,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int next) {
    if (pairs.size() == t) {
      visit(pairs);
      return;
    }
    for (int i = next; i <= static_cast<int>(n); ++i) {
      for (int j = 1; j <= static_cast<int>(n); ++j) {
        if (used[j - 1]) continue;
        used[j - 1] = true;
        pairs.emplace_back(i, j);
        rec(i + 1);
        pairs.pop_back();
        used[j - 1] = false;
      }
    }
  };
  rec(1);
}

CfmmModel default_cfmm(std::size_t n, double gamma) {
  CfmmModel m{{}, 100.0, gamma, 1.0};
  for (std::size_t i = 0; i < n; ++i) m.deltas.push_back((i % 2 ? -1.0 : 1.0) * static_cast<double>(i + 1));
  return m;
}

struct NamedPayoff {
  std::string name;
  PayoffFn f;
};

// Generator outputs at n: CFMM variants, liquidations when n is even, and
// junta terms with 0..3 constraints.
std::vector<NamedPayoff> generator_corpus(std::size_t n, const Capacity& cap) {
  std::vector<NamedPayoff> out;
  out.push_back({"cfmm_gamma0.01", cfmm_payoff(default_cfmm(n, 0.01), cap)});
  out.push_back({"cfmm_gamma0.1", cfmm_payoff(default_cfmm(n, 0.1), cap)});
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    for (int c = 1; c < static_cast<int>(k); ++c) {
      out.push_back({"liquidation_k" + std::to_string(k) + "_c" + std::to_string(c),
                     liquidation_payoff({k, c, 100.0}, cap)});
    }
  }
  const std::vector<std::pair<int, int>> pool{{1, 1}, {2, 3}, {3, 2}};
  for (std::size_t k = 0; k <= std::min<std::size_t>(3, n - 1); ++k) {
    JuntaTerm term{{pool.begin(), pool.begin() + static_cast<long>(k)}, 1.0};
    out.push_back({"junta_" + std::to_string(k), junta_payoff({term}, n, cap)});
  }
  return out;
}

struct NamedSet {
  std::string name;
  OrderingSet a;
};

std::vector<NamedSet> set_corpus(std::size_t n, std::uint64_t seed, const Capacity& cap) {
  std::vector<NamedSet> out;
  out.push_back({"all", OrderingSet::all(n)});
  out.push_back({"stab_1:1", stabilizer_set(n, {{1, 1}}, cap)});
  out.push_back({"stab_1:2", stabilizer_set(n, {{1, 2}}, cap)});
  if (n >= 3) out.push_back({"stab_1:1,2:2", stabilizer_set(n, {{1, 1}, {2, 2}}, cap)});
  for (std::uint64_t i = 0; i < 3; ++i) {
    const auto votes = simulate(n, 5, LatencyModel::iid_shuffle(derive_seed(seed, i)), cap);
    out.push_back({"fair_iid_" + std::to_string(i), valid_orderings(majority_graph(votes), cap)});
  }
  if (n >= 3) {
    const auto votes = simulate(n, n, LatencyModel::adversarial_cycle(), cap);
    out.push_back({"fair_adversarial", valid_orderings(majority_graph(votes), cap)});
  }
  return out;
}

VerifyOutcome roundtrip_suite(const VerifyOptions& o) {
  const std::size_t count = or_default(o.count, 20);
  double max_err = 0, max_rel = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto f = random_payoff(o.n, derive_seed(o.seed, i), {}, o.capacity);
    const auto spectrum = transform(f, o.capacity);
    max_err = std::max(max_err, max_abs_difference(inverse(spectrum), f));
    max_rel = std::max(max_rel, std::abs(spectral_energy(spectrum) - f.norm2_squared()) / f.norm2_squared());
  }
  const Rank sigma = factorial(o.n) / 2;
  const double delta_err =
      max_abs_difference(inverse(transform(PayoffFn::delta(o.n, sigma), o.capacity)), PayoffFn::delta(o.n, sigma));
  Checks c;
  c.theorem("roundtrip_max_abs_error", max_err <= 1e-9, {{"value", max_err}, {"limit", 1e-9}, {"samples", count}});
  c.theorem("plancherel_relative_error", max_rel <= 1e-9, {{"value", max_rel}, {"limit", 1e-9}});
  c.theorem("delta_recovery", delta_err <= 1e-9, {{"value", delta_err}, {"rank", sigma}});
  return {{{"checks", c.take()}, {"max_abs_error", max_err}, {"plancherel_relative_error", max_rel}}, c.passed()};
}

VerifyOutcome uncertainty_suite(const VerifyOptions& o) {
  const std::size_t count = or_default(o.count, 100);
  const double order = static_cast<double>(factorial(o.n));
  Checks c;
  std::size_t holds = 0;
  double min_ratio = INFINITY;
  for (std::size_t i = 0; i < count; ++i) {
    const auto u = uncertainty_check(random_payoff(o.n, derive_seed(o.seed, i), {}, o.capacity), o.capacity);
    holds += u.holds;
    min_ratio = std::min(min_ratio, u.product / order);
  }
  c.theorem("random_payoffs", holds == count,
            {{"holds", holds}, {"total", count}, {"min_product_over_order", min_ratio}});

  Json generators = Json::array();
  bool all_hold = true;
  for (const auto& [name, f] : generator_corpus(o.n, o.capacity)) {
    const auto u = uncertainty_check(f, o.capacity);
    all_hold = all_hold && u.holds;
    generators.push_back({{"payoff", name}, {"product_over_order", u.product / order}, {"holds", u.holds}});
  }
  c.theorem("generator_payoffs", all_hold, {{"payoffs", std::move(generators)}});

  const double delta_gap = std::abs(uncertainty_check(PayoffFn::delta(o.n, 0), o.capacity).product / order - 1.0);
  const double const_gap =
      std::abs(uncertainty_check(PayoffFn::constant(o.n, 1.0), o.capacity).product / order - 1.0);
  c.theorem("delta_equality", delta_gap <= 1e-12, {{"relative_gap", delta_gap}});
  c.theorem("constant_equality", const_gap <= 1e-12, {{"relative_gap", const_gap}});
  return {{{"checks", c.take()}, {"holds", holds}, {"total", count}}, c.passed()};
}

VerifyOutcome eigenvalue_suite(const VerifyOptions& o) {
  if (o.n < 2) throw SpecError("eigenvalue suite needs n >= 2");
  std::vector<std::pair<std::string, SymmetricSet>> families;
  families.emplace_back("identity", SymmetricSet(o.n, {0}));
  families.emplace_back("transpositions", transpositions(o.n));
  for (std::size_t i = 0; i < or_default(o.count, 3); ++i) {
    Rng rng(derive_seed(o.seed, i));
    std::vector<Rank> draws;
    for (std::size_t d = 0; d < 2 + i; ++d) draws.push_back(rng.below(factorial(o.n)));
    families.emplace_back("random_" + std::to_string(i), symmetrize(OrderingSet(o.n, draws)));
  }
  const bool brute = o.n <= 5;
  const auto probe = random_payoff(o.n, o.seed, {}, o.capacity);
  Checks c;
  Json per_family = Json::array();
  std::size_t averaging_violations = 0, adjacency_violations = 0;
  double worst_residual = 0, worst_leak = 0, worst_stochastic = 0;
  for (const auto& [name, family] : families) {
    const auto avg = spectrum_report(family, Normalization::Averaging);
    const auto adj = spectrum_report(family, Normalization::Adjacency);
    averaging_violations += avg.violations;
    adjacency_violations += adj.violations;
    worst_stochastic = std::max(worst_stochastic, std::abs(avg.blocks.front().operator_eigenvalues.front() - 1.0));
    for (const auto& b : avg.blocks) {
      worst_stochastic = std::max({worst_stochastic, b.operator_eigenvalues.front() - 1.0,
                                   -1.0 - b.operator_eigenvalues.back()});
    }
    Json entry{{"family", name},
               {"size", family.size()},
               {"members", family.members()},
               {"averaging", to_json(avg)},
               {"adjacency_violations", adj.violations}};
    if (brute) {
      const auto bc = block_consistency(family);
      worst_residual = std::max({worst_residual, bc.eigenvalue_residual, bc.gram_residual});
      entry["block_consistency"] = {{"eigenvalue_residual", bc.eigenvalue_residual},
                                    {"gram_residual", bc.gram_residual}};
    }
    if (o.n <= 6) {
      const double leak = isotype_leakage(family, probe);
      worst_leak = std::max(worst_leak, leak);
      entry["isotype_leakage"] = leak;
    }
    per_family.push_back(std::move(entry));
  }
  c.theorem("bound_averaging", averaging_violations == 0, {{"violations", averaging_violations}});
  c.trend("bound_adjacency", adjacency_violations == 0, {{"violations", adjacency_violations}});
  c.theorem("stochasticity", worst_stochastic <= 1e-9, {{"worst_excess", worst_stochastic}});
  if (brute) {
    c.theorem("block_consistency", worst_residual <= 1e-8, {{"worst_residual", worst_residual}, {"limit", 1e-8}});
  }
  if (o.n <= 6) c.theorem("isotype_invariance", worst_leak <= 1e-9, {{"worst_leakage", worst_leak}});
  return {{{"checks", c.take()},
           {"bound_satisfied_by", averaging_violations == 0 ? "averaging" : "none"},
           {"families", std::move(per_family)}},
          c.passed()};
}

VerifyOutcome indicator_degree_suite(const VerifyOptions& o) {
  Checks c;
  Json per_t = Json::array();
  std::size_t failures = 0, structure_failures = 0, checked = 0;
  for (std::size_t t = 1; t <= std::min<std::size_t>(3, o.n); ++t) {
    std::size_t sets = 0, gated = 0;
    for_each_constraint_list(o.n, t, [&](const auto& pairs) {
      const auto a = stabilizer_set(o.n, pairs, o.capacity);
      const auto r = verify_indicator_degree(a);
      ++sets;
      gated += r.size_gate;
      failures += !r.claim_holds;
      structure_failures += a.size() != factorial(o.n - t) || r.t_max < t;
    });
    checked += sets;
    per_t.push_back({{"t", t}, {"sets", sets}, {"size_gated", gated}});
  }
  std::size_t fair_failures = 0;
  Json fair = Json::array();
  for (std::size_t i = 0; i < or_default(o.count, 10); ++i) {
    const auto votes = simulate(o.n, 3 + i % 5, LatencyModel::iid_shuffle(derive_seed(o.seed, i)), o.capacity);
    const auto r = verify_indicator_degree(valid_orderings(majority_graph(votes), o.capacity));
    fair_failures += !r.claim_holds;
    fair.push_back(to_json(r));
  }
  c.theorem("stabilizer_sets", failures == 0, {{"checked", checked}, {"failures", failures}, {"by_t", std::move(per_t)}});
  c.theorem("stabilizer_structure", structure_failures == 0, {{"failures", structure_failures}});
  c.theorem("fair_ordering_sets", fair_failures == 0, {{"failures", fair_failures}, {"records", std::move(fair)}});
  return {{{"checks", c.take()}, {"failures", failures + fair_failures}}, c.passed()};
}

VerifyOutcome claim1_suite(const VerifyOptions& o) {
  Checks c;
  const auto payoffs = [&] {
    auto g = generator_corpus(o.n, o.capacity);
    g.push_back({"random_uniform", random_payoff(o.n, o.seed, {}, o.capacity)});
    return g;
  }();
  const auto sets = set_corpus(o.n, o.seed, o.capacity);
  Json records = Json::array();
  std::size_t pairs = 0, bound_failures = 0, identity_failures = 0, trivial_failures = 0, applicable = 0;
  double worst_identity = 0;
  for (const auto& [fname, f] : payoffs) {
    for (const auto& [aname, a] : sets) {
      if (restrict_to(f, a).is_zero() || f.is_zero()) continue;
      ++pairs;
      const auto fr = fairness_report(f, a);
      const auto ub = uncertainty_upper_bound(f, a);
      const auto c1 = claim1_report(f, a);
      bound_failures += !ub.holds;
      trivial_failures += fr.lambda_plus > fr.bound_trivial + 1e-12;
      if (fr.identity_residual) {
        worst_identity = std::max(worst_identity, *fr.identity_residual);
        identity_failures += *fr.identity_residual > 1e-12;
      }
      applicable += c1.applicable;
      records.push_back({{"payoff", fname}, {"set", aname}, {"set_size", a.size()},
                         {"fairness", to_json(fr)}, {"uncertainty_bound", to_json(ub)},
                         {"claim1", to_json(c1)}});
    }
  }
  c.theorem("uncertainty_fairness_bound", bound_failures == 0, {{"pairs", pairs}, {"failures", bound_failures}});
  c.theorem("connecting_identity", identity_failures == 0, {{"worst_residual", worst_identity}, {"limit", 1e-12}});
  c.theorem("trivial_bound", trivial_failures == 0, {{"failures", trivial_failures}});
  c.trend("applicable_fraction", true, {{"applicable", applicable}, {"pairs", pairs}});
  return {{{"checks", c.take()}, {"records", std::move(records)}}, c.passed()};
}

VerifyOutcome claim2_suite(const VerifyOptions& o) {
  if (o.n < 4) throw SpecError("claim2 suite needs n >= 4");
  Checks c;
  const auto [a, f] = claim2_construction(o.n, o.capacity);
  const auto r = claim2_report(f, a);
  const bool finite_positive = r.implied_cprime && std::isfinite(*r.implied_cprime) && *r.implied_cprime > 0;
  c.theorem("implied_cprime_finite_positive", finite_positive, {{"implied_cprime", to_json(r)["implied_cprime"]}});
  c.trend("applicable", r.applicable, {{"t_max", r.t_max}, {"s", r.s}, {"size_gate_value", r.size_gate_value}});
  c.trend("ratio_at_least_0.9", r.ratio >= 0.9, {{"ratio", r.ratio}});
  Json diag = nullptr;
  if (r.t_max < r.s && r.s + 1 <= o.n) diag = to_json(truncation_diagnostic(f, a, r.t_max, r.s));

  const auto delta = claim2_report(PayoffFn::delta(o.n, 0), OrderingSet::all(o.n));
  const double expected = 1.0 / static_cast<double>(o.n - 2);
  const double delta_gap = delta.implied_cprime ? std::abs(*delta.implied_cprime - expected) : INFINITY;
  c.theorem("delta_closed_form", delta_gap <= 1e-9, {{"implied_cprime", to_json(delta)["implied_cprime"]}, {"expected", expected}});
  return {{{"checks", c.take()},
           {"construction", {{"set", "stabilizer 1:1"}, {"payoff", "indicator of stabilizer 1:1,2:2,3:3"}}},
           {"report", to_json(r)},
           {"truncation_diagnostic", std::move(diag)}},
          c.passed()};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Claim2Construction claim2_construction(std::size_t n, const Capacity& capacity) {
  return {stabilizer_set(n, {{1, 1}}, capacity),
          indicator_payoff(stabilizer_set(n, {{1, 1}, {2, 2}, {3, 3}}, capacity))};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "uncertainty", "eigenvalue",
                                              "indicator_degree", "claim1", "claim2"};
  return names;
}

VerifyOutcome run_suite(const VerifyOptions& o) {
  using Runner = VerifyOutcome (*)(const VerifyOptions&);
  static const std::map<std::string, Runner> runners{
      {"roundtrip", roundtrip_suite},   {"uncertainty", uncertainty_suite},
      {"eigenvalue", eigenvalue_suite}, {"indicator_degree", indicator_degree_suite},
      {"claim1", claim1_suite},         {"claim2", claim2_suite}};
  const auto it = runners.find(o.suite);
  if (it == runners.end()) throw SpecError("unknown verify suite '" + o.suite + "'");
  o.capacity.check(o.n, "verify");
  auto out = it->second(o);
  out.report["suite"] = o.suite;
  out.report["n"] = o.n;
  out.report["passed"] = out.passed;
  return out;
}

}  // namespace mevfair
