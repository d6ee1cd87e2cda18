#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mevfair/cayley.hpp"
#include "mevfair/fairness.hpp"
#include "mevfair/fourier.hpp"
#include "mevfair/intersecting.hpp"
#include "mevfair/payoffs.hpp"
#include "mevfair/sequencing.hpp"

namespace mevfair {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "mevfair";
inline constexpr const char* kToolVersion = "0.1.0";

// Documents mirror the type fields; permutations are 1-based one-line
// arrays and partitions descending arrays.
Json to_json(const Permutation& p);
Json to_json(const Partition& p);
Json to_json(const PayoffFn& f);
Json to_json(const OrderingSet& a);
Json to_json(const FourierSpectrum& s);
Json to_json(const SchattenSummary& s);
Json to_json(const UncertaintyCheck& u);
Json to_json(const VoteProfile& v);
Json to_json(const MajorityGraph& g);
Json to_json(const CondorcetStats& c);
Json to_json(const IntersectionProfile& p);
Json to_json(const IndicatorDegreeCheck& c);
Json to_json(const UncertaintyBound& b);
Json to_json(const FairnessReport& r);
Json to_json(const Claim1Report& r);
Json to_json(const Claim2Report& r);
Json to_json(const TruncationDiagnostic& d);
Json to_json(const BlockSpectrum& b);
Json to_json(const SpectrumReport& r);
Json to_json(const CfmmModel& m);
Json to_json(const LiquidationModel& m);
Json to_json(const std::vector<JuntaTerm>& terms);

// Readers throw SpecError naming the offending field.
PayoffFn payoff_from_json(const Json& j);
OrderingSet ordering_set_from_json(const Json& j);
FourierSpectrum spectrum_from_json(const Json& j);
VoteProfile vote_profile_from_json(const Json& j);
CfmmModel cfmm_from_json(const Json& j);
LiquidationModel liquidation_from_json(const Json& j);
std::vector<JuntaTerm> junta_terms_from_json(const Json& j);

// Parses a file, reporting syntax errors with their line and column.
Json read_json_file(const std::filesystem::path& path);
std::string read_file_bytes(const std::filesystem::path& path);
// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);
// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace mevfair
