#include "mevfair/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "mevfair/errors.hpp"

namespace mevfair {

namespace {

template <class T>
T field(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) throw SpecError(std::string(context) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw SpecError(std::string(context) + ": missing field '" + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string(context) + ": field '" + key + "' has the wrong type (" + e.what() +
                    ")");
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback, const char* context) {
  return j.contains(key) ? field<T>(j, key, context) : fallback;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [i, j] : pairs) out.push_back({i, j});
  return out;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const Permutation& p) { return p.one_line(); }

Json to_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

Json to_json(const PayoffFn& f) { return {{"n", f.degree_n()}, {"values", f.values()}}; }

Json to_json(const OrderingSet& a) { return {{"n", a.degree_n()}, {"members", a.members()}}; }

Json to_json(const FourierSpectrum& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) {
    blocks.push_back({{"lambda", to_json(b.shape)}, {"matrix", matrix_json(b.coefficients)}});
  }
  return {{"n", s.n}, {"blocks", std::move(blocks)}};
}

Json to_json(const SchattenSummary& s) {
  Json per = Json::array();
  for (const auto& [shape, sv] : s.per_block) {
    per.push_back({{"lambda", to_json(shape)},
                   {"singular_values", std::vector<double>(sv.data(), sv.data() + sv.size())}});
  }
  return {{"s1", s.s1},
          {"sinf", s.sinf},
          {"concentration", s.concentration()},
          {"spread", s.spread()},
          {"per_block", std::move(per)}};
}

Json to_json(const UncertaintyCheck& u) {
  return {{"lhs_ratio", u.lhs_ratio},
          {"rhs_ratio", u.rhs_ratio},
          {"product", u.product},
          {"group_order", u.group_order},
          {"holds", u.holds}};
}

Json to_json(const VoteProfile& v) {
  Json validators = Json::array();
  for (const auto& p : v.validators) validators.push_back(to_json(p));
  return {{"n_tx", v.n_tx}, {"validators", std::move(validators)}};
}

Json to_json(const MajorityGraph& g) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.n_tx; ++i) {
    for (std::size_t j = 0; j < g.n_tx; ++j) {
      if (g.edge[i][j]) edges.push_back({{"from", i + 1}, {"to", j + 1}, {"weight", g.wins[i][j]}});
    }
  }
  Json sccs = Json::array();
  for (const auto& c : g.sccs) {
    Json comp = Json::array();
    for (auto t : c) comp.push_back(t + 1);
    sccs.push_back(std::move(comp));
  }
  return {{"n_tx", g.n_tx}, {"n_validators", g.n_validators}, {"edges", std::move(edges)},
          {"sccs", std::move(sccs)}};
}

Json to_json(const CondorcetStats& c) {
  return {{"num_sccs", c.num_sccs}, {"largest_scc", c.largest_scc}, {"has_cycle", c.has_cycle}};
}

Json to_json(const IntersectionProfile& p) {
  return {{"t_max", p.t_max},
          {"common_pairs", pairs_json(p.common_pairs)},
          {"size", p.size},
          {"size_gate", p.size_gate}};
}

Json to_json(const IndicatorDegreeCheck& c) {
  return {{"t_max", c.t_max},       {"t_effective", c.t_effective}, {"deg_1A", c.deg_1a},
          {"size_gate", c.size_gate}, {"claim_holds", c.claim_holds}};
}

Json to_json(const UncertaintyBound& b) {
  return {{"bound", b.bound},
          {"lambda_plus", b.lambda_plus},
          {"slack", b.slack},
          {"concentration", b.concentration},
          {"holds", b.holds}};
}

Json to_json(const FairnessReport& r) {
  return {{"lambda_plus", r.lambda_plus},
          {"lambda_star", optional_number(r.lambda_star)},
          {"max_value", r.max_value},
          {"mean_value", r.mean_value},
          {"classification", to_string(r.classification)},
          {"bound_upper", optional_number(r.bound_upper)},
          {"bound_trivial", r.bound_trivial},
          {"identity_residual", optional_number(r.identity_residual)}};
}

Json to_json(const Claim1Report& r) {
  return {{"s", r.s},
          {"t_max", r.t_max},
          {"applicable", r.applicable},
          {"k_ratio", r.k_ratio},
          {"d_sq_sum", r.d_sq_sum},
          {"bound_form", r.bound_form},
          {"uncertainty_bound", r.uncertainty_bound},
          {"lambda_plus", r.lambda_plus}};
}

Json to_json(const Claim2Report& r) {
  return {{"s", r.s},
          {"t_max", r.t_max},
          {"size_gate_value", r.size_gate_value},
          {"applicable", r.applicable},
          {"lambda_plus", r.lambda_plus},
          {"g_inf", r.g_inf},
          {"ratio", r.ratio},
          {"rhs_scale", r.rhs_scale},
          {"rhs_template", "(1 - cprime * rhs_scale) * g_inf"},
          {"implied_cprime", optional_number(r.implied_cprime)}};
}

Json to_json(const TruncationDiagnostic& d) {
  return {{"t", d.t},
          {"s", d.s},
          {"one_norm_mid", d.one_norm_mid},
          {"gram_one_norm_mid", d.gram_one_norm_mid},
          {"eigensum", d.eigensum},
          {"g_one_norm_on_A", d.g_one_norm_on_a},
          {"g_inf_on_A", d.g_inf_on_a},
          {"band_bound_holds", d.band_bound_holds},
          {"non_contractive_holds", d.non_contractive_holds},
          {"elementary_holds", d.elementary_holds}};
}

Json to_json(const BlockSpectrum& b) {
  return {{"lambda", to_json(b.shape)},
          {"dimension", b.dimension},
          {"operator_eigenvalues", b.operator_eigenvalues},
          {"gram_eigenvalues", b.gram_eigenvalues},
          {"bound", b.bound},
          {"within_bound", b.within_bound}};
}

Json to_json(const SpectrumReport& r) {
  Json blocks = Json::object();
  for (const auto& b : r.blocks) blocks[b.shape.to_string()] = to_json(b);
  return {{"n", r.n},
          {"family_size", r.family_size},
          {"normalization", to_string(r.normalization)},
          {"violations", r.violations},
          {"blocks", std::move(blocks)}};
}

Json to_json(const CfmmModel& m) {
  return {{"model", "cfmm"}, {"deltas", m.deltas}, {"p0", m.p0}, {"gamma", m.gamma}, {"beta", m.beta}};
}

Json to_json(const LiquidationModel& m) {
  return {{"model", "liquidation"}, {"k", m.k}, {"c", m.c}, {"p0", m.p0}};
}

Json to_json(const std::vector<JuntaTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    out.push_back({{"constraints", pairs_json(t.constraints)}, {"coefficient", t.coefficient}});
  }
  return out;
}

PayoffFn payoff_from_json(const Json& j) {
  return PayoffFn(field<std::size_t>(j, "n", "payoff"), field<std::vector<double>>(j, "values", "payoff"));
}

OrderingSet ordering_set_from_json(const Json& j) {
  return OrderingSet(field<std::size_t>(j, "n", "ordering set"),
                     field<std::vector<Rank>>(j, "members", "ordering set"));
}

FourierSpectrum spectrum_from_json(const Json& j) {
  FourierSpectrum s;
  s.n = field<std::size_t>(j, "n", "spectrum");
  for (const auto& b : field<Json>(j, "blocks", "spectrum")) {
    const auto rows = field<std::vector<std::vector<double>>>(b, "matrix", "spectrum block");
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw SpecError("spectrum block: matrix is not square");
      for (std::size_t c = 0; c < rows.size(); ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
      }
    }
    s.blocks.push_back({Partition(field<std::vector<int>>(b, "lambda", "spectrum block")), std::move(m)});
  }
  return s;
}

VoteProfile vote_profile_from_json(const Json& j) {
  VoteProfile v;
  v.n_tx = field<std::size_t>(j, "n_tx", "votes");
  const auto orders = field<std::vector<std::vector<int>>>(j, "validators", "votes");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    try {
      v.validators.push_back(Permutation::from_one_line(orders[i]));
    } catch (const SpecError& e) {
      throw SpecError("votes: validators[" + std::to_string(i) + "]: " + e.what());
    }
  }
  v.validate();
  return v;
}

CfmmModel cfmm_from_json(const Json& j) {
  CfmmModel m;
  m.deltas = field<std::vector<double>>(j, "deltas", "cfmm model");
  m.p0 = field_or(j, "p0", m.p0, "cfmm model");
  m.gamma = field_or(j, "gamma", m.gamma, "cfmm model");
  m.beta = field_or(j, "beta", m.beta, "cfmm model");
  return m;
}

LiquidationModel liquidation_from_json(const Json& j) {
  LiquidationModel m;
  m.k = field<std::size_t>(j, "k", "liquidation model");
  m.c = field<int>(j, "c", "liquidation model");
  m.p0 = field_or(j, "p0", m.p0, "liquidation model");
  return m;
}

std::vector<JuntaTerm> junta_terms_from_json(const Json& j) {
  std::vector<JuntaTerm> terms;
  for (const auto& t : field<Json>(j, "terms", "junta model")) {
    JuntaTerm term;
    for (const auto& p : field<std::vector<std::vector<int>>>(t, "constraints", "junta term")) {
      if (p.size() != 2) throw SpecError("junta term: each constraint must be an [i, j] pair");
      term.constraints.emplace_back(p[0], p[1]);
    }
    term.coefficient = field_or(t, "coefficient", 1.0, "junta term");
    terms.push_back(std::move(term));
  }
  return terms;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < bytes.size(); ++i) {
      if (bytes[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                    ": parse error: " + e.what());
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mevfair
