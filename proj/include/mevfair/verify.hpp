#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mevfair/serialize.hpp"

namespace mevfair {

struct VerifyOptions {
  std::string suite;
  std::size_t n = 4;
  std::uint64_t seed = 0;
  double tol = kDegreeTolerance;
  Capacity capacity{};
  std::size_t count = 0;  // corpus size; 0 picks the suite default
};

/// Suite result. Theorem checks decide `passed`; trend checks are reported
/// only.
struct VerifyOutcome {
  Json report;
  bool passed = false;
};

// roundtrip, uncertainty, eigenvalue, indicator_degree, claim1, claim2.
const std::vector<std::string>& suite_names();

// Throws SpecError for an unknown suite and CapacityError past the guard.
VerifyOutcome run_suite(const VerifyOptions& options);

// Deterministic per-sample seed derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// The m-junta-payoff over k-junta-set pair used as Claim 2 evidence:
// A = {pi : pi(1) = 1}, f = 1_B with B = {pi : pi(i) = i, i = 1, 2, 3}.
struct Claim2Construction {
  OrderingSet set;
  PayoffFn payoff;
};
Claim2Construction claim2_construction(std::size_t n, const Capacity& capacity = {});

}  // namespace mevfair
