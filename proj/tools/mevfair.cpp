#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mevfair/errors.hpp"
#include "mevfair/serialize.hpp"
#include "mevfair/verify.hpp"

using namespace mevfair;

namespace {

// Shared by every subcommand.
struct CommonFlags {
  std::string out;
  std::string csv;
  std::uint64_t seed = 0;
  double tol = kDegreeTolerance;
  std::size_t max_n = kDefaultMaxN;

  Capacity capacity() const { return Capacity{max_n}; }
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  cmd->add_option("--csv", c.csv, "Also write a one-row-per-lambda CSV table");
  cmd->add_option("--seed", c.seed, "Base seed for every random draw")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Relative threshold for Fourier degree")->capture_default_str();
  cmd->add_option("--max-n", c.max_n, "Capacity guard on n")->capture_default_str();
}

struct Input {
  std::string path;
  std::string sha256;
  Json doc;
};

Input load(const std::string& path) {
  Input in{path, sha256_hex(read_file_bytes(path)), read_json_file(path)};
  // Accept either a bare document or a report produced by this tool.
  if (in.doc.is_object() && in.doc.contains("result")) in.doc = in.doc["result"];
  return in;
}

Json common_config(const CommonFlags& c) {
  return {{"tol", c.tol}, {"max_n", c.max_n}};
}

std::string join_csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) row += (i ? "," : "") + cells[i];
  return row + "\n";
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::string quoted(const Partition& p) { return "\"" + p.to_string() + "\""; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot write " + path);
  out << text;
}

class Run {
 public:
  Run(std::string command, const CommonFlags& flags) : command_(std::move(command)), flags_(flags) {
    config_ = common_config(flags);
  }

  Json& config() { return config_; }
  void input(const Input& in) { inputs_.push_back({{"path", in.path}, {"sha256", in.sha256}}); }
  void summary(const std::string& line) { summary_ += line + "\n"; }
  void csv(std::string table) { csv_ = std::move(table); }

  void finish(Json result) const {
    const Json doc{{"tool", kToolName},  {"version", kToolVersion}, {"command", command_},
                   {"config", config_},  {"seed", flags_.seed},     {"inputs", inputs_},
                   {"result", std::move(result)}};
    if (flags_.out.empty()) {
      std::cout << dump(doc);
      std::cerr << summary_;
    } else {
      write_text(flags_.out, dump(doc));
      std::cout << summary_;
    }
    if (!flags_.csv.empty()) {
      if (csv_.empty()) throw SpecError("--csv: no per-lambda table for this " + command_ + " run");
      write_text(flags_.csv, csv_);
    }
  }

 private:
  std::string command_;
  const CommonFlags& flags_;
  Json config_;
  Json inputs_ = Json::array();
  std::string summary_;
  std::string csv_;
};

std::vector<double> parse_doubles(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecError(std::string(flag) + ": '" + item + "' is not a number");
    }
  }
  return out;
}

// "1:1,2:3" -> {(1,1),(2,3)}.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw SpecError("--pairs: '" + item + "' is not of the form i:j");
    }
  }
  return out;
}

std::string spectrum_csv(const FourierSpectrum& s) {
  std::string out = join_csv_row({"lambda", "level", "dim", "frobenius", "sigma_max", "sigma_sum"});
  for (const auto& b : s.blocks) {
    const Eigen::JacobiSVD<Matrix> svd(b.coefficients);
    const auto& sv = svd.singularValues();
    out += join_csv_row({quoted(b.shape), std::to_string(b.shape.level()), std::to_string(dim(b.shape)),
                         num(b.coefficients.norm()), num(sv.size() ? sv.maxCoeff() : 0.0), num(sv.sum())});
  }
  return out;
}

// ---------------------------------------------------------------- gen-payoff

struct GenFlags {
  std::string model;
  std::string config_path;
  std::size_t n = 0;
  std::string deltas;
  double p0 = 100.0, gamma = 0.001, beta = 1.0;
  std::size_t k = 2;
  int c = 1;
  std::string pairs;
  double coef = 1.0;
  std::string dist = "uniform";
  std::size_t sparse_k = 1;
  std::string set_path;
};

void gen_payoff(const GenFlags& g, const CommonFlags& flags) {
  Run run("gen-payoff", flags);
  const auto cap = flags.capacity();
  Json model;
  std::optional<PayoffFn> f;

  Json spec;
  if (!g.config_path.empty()) {
    const auto in = load(g.config_path);
    run.input(in);
    spec = in.doc;
    if (!spec.is_object() || !spec.contains("model") || !spec["model"].is_string()) {
      throw SpecError(g.config_path + ": missing string field 'model'");
    }
  }
  const std::string kind = spec.is_null() ? g.model : spec["model"].get<std::string>();

  if (kind == "cfmm") {
    CfmmModel m;
    if (!spec.is_null()) {
      m = cfmm_from_json(spec);
    } else {
      if (!g.deltas.empty()) {
        m.deltas = parse_doubles(g.deltas, "--deltas");
      } else if (g.n) {
        for (std::size_t i = 0; i < g.n; ++i) m.deltas.push_back((i % 2 ? -1.0 : 1.0) * static_cast<double>(i + 1));
      } else {
        throw SpecError("cfmm: give --deltas or --n");
      }
      m.p0 = g.p0;
      m.gamma = g.gamma;
      m.beta = g.beta;
    }
    f = cfmm_payoff(m, cap);
    model = to_json(m);
  } else if (kind == "liquidation") {
    const LiquidationModel m = spec.is_null() ? LiquidationModel{g.k, g.c, g.p0} : liquidation_from_json(spec);
    f = liquidation_payoff(m, cap);
    model = to_json(m);
  } else if (kind == "junta") {
    std::vector<JuntaTerm> terms;
    std::size_t n = g.n;
    if (!spec.is_null()) {
      terms = junta_terms_from_json(spec);
      if (!spec.contains("n") || !spec["n"].is_number_unsigned()) throw SpecError("junta model: missing field 'n'");
      n = spec["n"].get<std::size_t>();
    } else {
      terms.push_back({parse_pairs(g.pairs), g.coef});
    }
    if (!n) throw SpecError("junta: --n is required");
    f = junta_payoff(terms, n, cap);
    model = {{"model", "junta"}, {"n", n}, {"terms", to_json(terms)}};
  } else if (kind == "random") {
    std::size_t n = g.n;
    std::string dist = g.dist;
    std::size_t sparse_k = g.sparse_k;
    if (!spec.is_null()) {
      n = spec.value("n", std::size_t{0});
      dist = spec.value("dist", std::string("uniform"));
      sparse_k = spec.value("sparse_k", std::size_t{1});
    }
    if (!n) throw SpecError("random: --n is required");
    RandomDist d;
    if (dist == "uniform") {
      d = RandomDist::uniform01();
    } else if (dist == "sparse") {
      d = RandomDist::sparse(sparse_k);
    } else {
      throw SpecError("random: --dist must be uniform or sparse, got '" + dist + "'");
    }
    f = random_payoff(n, flags.seed, d, cap);
    model = {{"model", "random"}, {"n", n}, {"dist", dist}};
    if (dist == "sparse") model["sparse_k"] = sparse_k;
  } else if (kind == "indicator") {
    if (g.set_path.empty()) throw SpecError("indicator: --set is required");
    auto in = load(g.set_path);
    run.input(in);
    if (in.doc.contains("set")) in.doc = in.doc["set"];
    const auto a = ordering_set_from_json(in.doc);
    cap.check(a.degree_n(), "gen-payoff");
    f = indicator_payoff(a);
    model = {{"model", "indicator"}, {"set_size", a.size()}};
  } else {
    throw SpecError("--model must be one of cfmm, liquidation, junta, random, indicator; got '" + kind + "'");
  }

  const auto& v = f->values();
  const double lo = *std::min_element(v.begin(), v.end());
  const double hi = *std::max_element(v.begin(), v.end());
  const std::size_t support = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return x != 0.0; }));
  run.config()["model"] = model;
  std::ostringstream line;
  line << "n=" << f->degree_n() << " n!=" << v.size() << " min=" << num(lo) << " max=" << num(hi)
       << " mean=" << num(f->mean()) << " support=" << support;
  run.summary(line.str());

  Json result = to_json(*f);
  result["summary"] = {{"n_factorial", v.size()}, {"min", lo}, {"max", hi}, {"mean", f->mean()}, {"support", support}};
  run.csv(spectrum_csv(transform(*f, cap)));
  run.finish(std::move(result));
}

// ---------------------------------------------------------------- transform

void transform_cmd(const std::string& payoff_path, const CommonFlags& flags) {
  Run run("transform", flags);
  const auto in = load(payoff_path);
  run.input(in);
  const auto f = payoff_from_json(in.doc);
  const auto cap = flags.capacity();
  const auto s = transform(f, cap);
  const auto deg = degree(s, std::sqrt(f.norm2_squared()), flags.tol);
  const auto schatten = schatten_summary(s);
  std::ostringstream line;
  line << "n=" << s.n << " blocks=" << s.blocks.size() << " degree=" << deg << " s1=" << num(schatten.s1)
       << " sinf=" << num(schatten.sinf);
  run.summary(line.str());
  run.csv(spectrum_csv(s));
  Json result{{"spectrum", to_json(s)}, {"degree", deg}, {"schatten", to_json(schatten)},
              {"energy", spectral_energy(s)}};
  run.finish(std::move(result));
}

// ---------------------------------------------------------------- analyze

template <class F>
Json guarded(F&& fn) {
  try {
    return fn();
  } catch (const DegenerateError& e) {
    return {{"undefined", e.what()}};
  }
}

void analyze(const std::string& payoff_path, const std::string& set_path, std::optional<std::size_t> t,
             std::optional<std::size_t> s, const CommonFlags& flags) {
  Run run("analyze", flags);
  const auto pin = load(payoff_path);
  auto ain = load(set_path);
  run.input(pin);
  run.input(ain);
  if (ain.doc.contains("set")) ain.doc = ain.doc["set"];
  const auto f = payoff_from_json(pin.doc);
  const auto a = ordering_set_from_json(ain.doc);
  const auto cap = flags.capacity();
  cap.check(f.degree_n(), "analyze");
  if (f.degree_n() != a.degree_n()) {
    throw DimensionError("analyze: payoff has n = " + std::to_string(f.degree_n()) + " but set has n = " +
                         std::to_string(a.degree_n()));
  }
  a.require_nonempty("analyze");
  if (t) run.config()["t"] = *t;
  if (s) run.config()["s"] = *s;

  const auto fr = fairness_report(f, a);
  const auto g = restrict_to(f, a);
  const auto spec_f = transform(f, cap);
  const auto spec_g = transform(g, cap);
  const auto deg_f = degree(spec_f, std::sqrt(f.norm2_squared()), flags.tol);
  const auto profile = intersection_profile(a);

  Json result{{"n", f.degree_n()},
              {"set_size", a.size()},
              {"fairness", to_json(fr)},
              {"degree", deg_f},
              {"degree_on_A", g.is_zero() ? Json(nullptr) : Json(degree(spec_g, std::sqrt(g.norm2_squared()), flags.tol))},
              {"intersection", to_json(profile)},
              {"uncertainty_bound", guarded([&] { return to_json(uncertainty_upper_bound(f, a)); })},
              {"claim1", guarded([&] { return to_json(claim1_report(f, a)); })},
              {"claim2", guarded([&] { return to_json(claim2_report(f, a)); })}};
  if (t || s) {
    if (!t || !s) throw SpecError("analyze: --t and --s go together");
    result["truncation_diagnostic"] = to_json(truncation_diagnostic(f, a, *t, *s));
  }

  std::string table = join_csv_row({"lambda", "level", "dim", "frobenius_f", "frobenius_f_on_A"});
  for (std::size_t i = 0; i < spec_f.blocks.size(); ++i) {
    const auto& shape = spec_f.blocks[i].shape;
    table += join_csv_row({quoted(shape), std::to_string(shape.level()), std::to_string(dim(shape)),
                           num(spec_f.blocks[i].coefficients.norm()), num(spec_g.blocks[i].coefficients.norm())});
  }
  run.csv(std::move(table));

  std::ostringstream line;
  line << "lambda_plus=" << num(fr.lambda_plus) << " classification=" << to_string(fr.classification)
       << " degree=" << deg_f << " t_max=" << profile.t_max;
  run.summary(line.str());
  run.finish(std::move(result));
}

// ---------------------------------------------------------------- verify

int verify(const std::string& suite, std::size_t n, std::size_t count, const CommonFlags& flags) {
  Run run("verify", flags);
  run.config()["suite"] = suite;
  run.config()["n"] = n;
  run.config()["count"] = count;
  VerifyOptions o{suite, n, flags.seed, flags.tol, flags.capacity(), count};
  auto outcome = run_suite(o);

  if (suite == "eigenvalue") {
    std::string table = join_csv_row({"family", "lambda", "level", "dim", "max_abs_eigenvalue", "bound", "within_bound"});
    for (const auto& fam : outcome.report["families"]) {
      for (const auto& [key, b] : fam["averaging"]["blocks"].items()) {
        double top = 0;
        for (const auto& e : b["operator_eigenvalues"]) top = std::max(top, std::abs(e.get<double>()));
        const auto lam = Partition(b["lambda"].get<std::vector<int>>());
        table += join_csv_row({fam["family"].get<std::string>(), "\"" + key + "\"", std::to_string(lam.level()),
                               std::to_string(b["dimension"].get<std::size_t>()), num(top),
                               num(b["bound"].get<double>()), b["within_bound"].get<bool>() ? "true" : "false"});
      }
    }
    run.csv(std::move(table));
  }

  std::size_t theorem = 0, theorem_ok = 0;
  for (const auto& c : outcome.report["checks"]) {
    if (c["kind"] == "theorem") {
      ++theorem;
      theorem_ok += c["passed"].get<bool>();
    }
  }
  std::ostringstream line;
  line << "suite=" << suite << " n=" << n << " theorem_checks=" << theorem_ok << "/" << theorem
       << (outcome.passed ? " PASS" : " FAIL");
  run.summary(line.str());
  const bool passed = outcome.passed;
  run.finish(std::move(outcome.report));
  return passed ? 0 : 1;
}

// ---------------------------------------------------------------- simulate

struct SimFlags {
  std::string votes_path;
  std::size_t n_tx = 0;
  std::size_t validators = 0;
  std::string latency = "iid";
  std::size_t trials = 0;
};

void simulate_cmd(const SimFlags& sf, const CommonFlags& flags) {
  Run run("simulate", flags);
  const auto cap = flags.capacity();
  VoteProfile votes;
  if (!sf.votes_path.empty()) {
    const auto in = load(sf.votes_path);
    run.input(in);
    try {
      votes = vote_profile_from_json(in.doc);
    } catch (const std::exception& e) {
      throw SpecError(sf.votes_path + ": " + e.what());
    }
  } else {
    if (!sf.n_tx || !sf.validators) throw SpecError("simulate: give --votes or both --n-tx and --validators");
    LatencyModel model;
    if (sf.latency == "iid") {
      model = LatencyModel::iid_shuffle(flags.seed);
    } else if (sf.latency == "adversarial") {
      model = LatencyModel::adversarial_cycle();
    } else {
      throw SpecError("--latency must be iid or adversarial, got '" + sf.latency + "'");
    }
    votes = simulate(sf.n_tx, sf.validators, model, cap);
    run.config()["n_tx"] = sf.n_tx;
    run.config()["validators"] = sf.validators;
    run.config()["latency"] = sf.latency;
  }
  const auto g = majority_graph(votes);
  const auto a = valid_orderings(g, cap);
  const auto stats = condorcet_stats(g);
  const auto profile = intersection_profile(a);
  Json result{{"votes", to_json(votes)},
              {"graph", to_json(g)},
              {"set", to_json(a)},
              {"stats", to_json(stats)},
              {"intersection", to_json(profile)}};

  if (sf.trials) {
    if (!sf.votes_path.empty() || sf.latency != "iid") throw SpecError("--trials needs the iid generator");
    run.config()["trials"] = sf.trials;
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < sf.trials; ++i) {
      const auto v = simulate(sf.n_tx, sf.validators, LatencyModel::iid_shuffle(derive_seed(flags.seed, i)), cap);
      cycles += condorcet_stats(majority_graph(v)).has_cycle;
    }
    result["monte_carlo"] = {{"trials", sf.trials},
                             {"cycles", cycles},
                             {"cycle_frequency", static_cast<double>(cycles) / static_cast<double>(sf.trials)}};
  }
  run.csv(spectrum_csv(transform(indicator_payoff(a), cap)));

  std::ostringstream line;
  line << "n_tx=" << votes.n_tx << " validators=" << votes.validators.size() << " |A|=" << a.size()
       << " sccs=" << stats.num_sccs << " t_max=" << profile.t_max;
  run.summary(line.str());
  run.finish(std::move(result));
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return 3;
  if (dynamic_cast<const CapacityError*>(&e)) return 4;
  if (dynamic_cast<const EmptySetError*>(&e)) return 5;
  if (dynamic_cast<const DegenerateError*>(&e)) return 6;
  if (dynamic_cast<const IndexError*>(&e)) return 7;
  return 2;
}

const char* error_kind(const std::exception& e) {
  switch (exit_code_for(e)) {
    case 3: return "dimension error";
    case 4: return "capacity error";
    case 5: return "empty-set error";
    case 6: return "degenerate input";
    case 7: return "index error";
    default: return "usage error";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis of transaction-ordering payoffs over the symmetric group"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommonFlags gen_common, tr_common, an_common, ver_common, sim_common;

  GenFlags gf;
  auto* gen = app.add_subcommand("gen-payoff", "Generate a payoff vector over S_n");
  add_common(gen, gen_common);
  gen->add_option("--model", gf.model, "cfmm | liquidation | junta | random | indicator");
  gen->add_option("--config", gf.config_path, "JSON model config (alternative to --model flags)");
  gen->add_option("--n", gf.n, "Number of transactions");
  gen->add_option("--deltas", gf.deltas, "cfmm: comma-separated trade sizes, one per transaction");
  gen->add_option("--p0", gf.p0, "cfmm/liquidation: initial price")->capture_default_str();
  gen->add_option("--gamma", gf.gamma, "cfmm: price impact")->capture_default_str();
  gen->add_option("--beta", gf.beta, "cfmm: PNL weight")->capture_default_str();
  gen->add_option("--k", gf.k, "liquidation: up-moves (n = 2k)")->capture_default_str();
  gen->add_option("--c", gf.c, "liquidation: drop threshold, 0 < c < k")->capture_default_str();
  gen->add_option("--pairs", gf.pairs, "junta: constraints i:j,... meaning pi(i) = j");
  gen->add_option("--coef", gf.coef, "junta: coefficient")->capture_default_str();
  gen->add_option("--dist", gf.dist, "random: uniform | sparse")->capture_default_str();
  gen->add_option("--sparse-k", gf.sparse_k, "random: support size for sparse")->capture_default_str();
  gen->add_option("--set", gf.set_path, "indicator: ordering-set JSON");
  gen->get_option("--model")->excludes("--config");

  std::string tr_payoff;
  auto* tr = app.add_subcommand("transform", "Fourier transform of a payoff");
  add_common(tr, tr_common);
  tr->add_option("--payoff", tr_payoff, "Payoff JSON")->required();

  std::string an_payoff, an_set;
  std::optional<std::size_t> an_t, an_s;
  auto* an = app.add_subcommand("analyze", "Fairness analysis of a payoff restricted to an ordering set");
  add_common(an, an_common);
  an->add_option("--payoff", an_payoff, "Payoff JSON")->required();
  an->add_option("--set", an_set, "Ordering-set JSON")->required();
  an->add_option("--t", an_t, "Truncation diagnostic lower level");
  an->add_option("--s", an_s, "Truncation diagnostic upper level");

  std::string suite;
  std::size_t ver_n = 4, ver_count = 0;
  auto* ver = app.add_subcommand("verify", "Run a property suite; exit 0 iff every theorem check passes");
  add_common(ver, ver_common);
  ver->add_option("--suite", suite, "roundtrip | uncertainty | eigenvalue | indicator_degree | claim1 | claim2")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--n", ver_n, "Group degree")->capture_default_str();
  ver->add_option("--count", ver_count, "Corpus size (0 = suite default)")->capture_default_str();

  SimFlags sf;
  auto* sim = app.add_subcommand("simulate", "Majority-ordering simulation");
  add_common(sim, sim_common);
  sim->add_option("--votes", sf.votes_path, "Vote profile JSON");
  sim->add_option("--n-tx", sf.n_tx, "Transactions when generating votes");
  sim->add_option("--validators", sf.validators, "Validators when generating votes");
  sim->add_option("--latency", sf.latency, "iid | adversarial")->capture_default_str();
  sim->add_option("--trials", sf.trials, "Monte-Carlo trials for cycle frequency");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (gf.model.empty() && gf.config_path.empty()) throw SpecError("gen-payoff: give --model or --config");
      gen_payoff(gf, gen_common);
    } else if (tr->parsed()) {
      transform_cmd(tr_payoff, tr_common);
    } else if (an->parsed()) {
      analyze(an_payoff, an_set, an_t, an_s, an_common);
    } else if (ver->parsed()) {
      return verify(suite, ver_n, ver_count, ver_common);
    } else if (sim->parsed()) {
      simulate_cmd(sf, sim_common);
    }
  } catch (const std::exception& e) {
    std::cerr << "mevfair: " << error_kind(e) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
