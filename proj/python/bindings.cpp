#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mevfair/errors.hpp"
#include "mevfair/representation.hpp"
#include "mevfair/verify.hpp"

namespace py = pybind11;
using namespace mevfair;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return std::move(out);
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

// n such that n! == size.
std::size_t degree_from_size(std::size_t size) {
  for (std::size_t n = 1; n <= kEnumerationLimit; ++n) {
    if (factorial(n) == size) return n;
    if (factorial(n) > size) break;
  }
  throw DimensionError("payoff length " + std::to_string(size) + " is not n! for n <= 10");
}

PayoffFn payoff(const py::array_t<double, py::array::c_style | py::array::forcecast>& values) {
  if (values.ndim() != 1) throw DimensionError("payoff must be a 1-d array");
  std::vector<double> v(values.data(), values.data() + values.size());
  const auto n = degree_from_size(v.size());
  return PayoffFn(n, std::move(v));
}

py::array_t<double> array(const PayoffFn& f) { return py::array_t<double>(f.size(), f.values().data()); }

OrderingSet ordering_set(std::size_t n, std::vector<Rank> members) { return OrderingSet(n, std::move(members)); }

std::vector<int> one_line(const Permutation& p) { return p.one_line(); }

py::list spectrum_to_python(const FourierSpectrum& s) {
  py::list out;
  for (const auto& b : s.blocks) {
    out.append(py::make_tuple(py::tuple(py::cast(std::vector<int>(b.shape.parts().begin(), b.shape.parts().end()))),
                              b.coefficients));
  }
  return out;
}

FourierSpectrum spectrum_from_python(std::size_t n, const py::iterable& blocks) {
  FourierSpectrum s;
  s.n = n;
  for (const auto& item : blocks) {
    const auto pair = item.cast<py::tuple>();
    s.blocks.push_back({Partition(pair[0].cast<std::vector<int>>()), pair[1].cast<Matrix>()});
  }
  return s;
}

VoteProfile votes(std::size_t n_tx, const std::vector<std::vector<int>>& validators) {
  VoteProfile v{n_tx, {}};
  for (const auto& o : validators) v.validators.push_back(Permutation::from_one_line(o));
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier analysis of transaction-ordering payoffs over the symmetric group";
  m.attr("__version__") = kToolVersion;
  m.attr("ENUMERATION_LIMIT") = kEnumerationLimit;

  auto base = py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<EmptySetError>(m, "EmptySetError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);
  (void)base;

  // Permutations use 1-based one-line lists.
  m.def("factorial", &factorial, py::arg("n"));
  m.def("lehmer_rank", [](const std::vector<int>& p) { return lehmer_rank(Permutation::from_one_line(p)); },
        py::arg("one_line"));
  m.def("lehmer_unrank", [](std::size_t n, Rank r) { return one_line(lehmer_unrank(n, r)); }, py::arg("n"),
        py::arg("rank"));
  m.def("compose",
        [](const std::vector<int>& p, const std::vector<int>& q) {
          return one_line(compose(Permutation::from_one_line(p), Permutation::from_one_line(q)));
        },
        py::arg("p"), py::arg("q"), "(p * q)(i) = p(q(i))");

  m.def("partitions",
        [](std::size_t n) {
          std::vector<std::vector<int>> out;
          for (const auto& l : partitions_of(n)) out.emplace_back(l.parts().begin(), l.parts().end());
          return out;
        },
        py::arg("n"));
  m.def("dim", [](const std::vector<int>& shape) { return dim(Partition(shape)); }, py::arg("shape"));
  m.def("irrep_matrix",
        [](const std::vector<int>& shape, const std::vector<int>& p) {
          return irrep(Partition(shape)).evaluate(Permutation::from_one_line(p));
        },
        py::arg("shape"), py::arg("one_line"), "Young orthogonal form matrix of a permutation");

  m.def("cfmm_payoff",
        [](std::vector<double> deltas, double p0, double gamma, double beta, std::size_t max_n) {
          return array(cfmm_payoff({std::move(deltas), p0, gamma, beta}, Capacity{max_n}));
        },
        py::arg("deltas"), py::arg("p0") = 100.0, py::arg("gamma") = 0.001, py::arg("beta") = 1.0,
        py::arg("max_n") = kDefaultMaxN);
  m.def("liquidation_payoff",
        [](std::size_t k, int c, double p0, std::size_t max_n) {
          return array(liquidation_payoff({k, c, p0}, Capacity{max_n}));
        },
        py::arg("k"), py::arg("c"), py::arg("p0") = 100.0, py::arg("max_n") = kDefaultMaxN);
  m.def("junta_payoff",
        [](const std::vector<std::pair<std::vector<std::pair<int, int>>, double>>& terms, std::size_t n,
           std::size_t max_n) {
          std::vector<JuntaTerm> t;
          for (const auto& [c, coef] : terms) t.push_back({c, coef});
          return array(junta_payoff(t, n, Capacity{max_n}));
        },
        py::arg("terms"), py::arg("n"), py::arg("max_n") = kDefaultMaxN,
        "terms: [([(i, j), ...], coefficient), ...] with pi(i) = j constraints");
  m.def("random_payoff",
        [](std::size_t n, std::uint64_t seed, std::size_t sparse_k, std::size_t max_n) {
          const auto dist = sparse_k ? RandomDist::sparse(sparse_k) : RandomDist::uniform01();
          return array(random_payoff(n, seed, dist, Capacity{max_n}));
        },
        py::arg("n"), py::arg("seed"), py::arg("sparse_k") = 0, py::arg("max_n") = kDefaultMaxN,
        "Uniform(0,1) values, or sparse_k nonzero entries when sparse_k > 0");
  m.def("indicator_payoff",
        [](std::size_t n, std::vector<Rank> members) { return array(indicator_payoff(ordering_set(n, members))); },
        py::arg("n"), py::arg("members"));

  m.def("transform",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, std::size_t max_n) {
          return spectrum_to_python(transform(payoff(f), Capacity{max_n}));
        },
        py::arg("values"), py::arg("max_n") = kDefaultMaxN, "List of (shape, coefficient matrix)");
  m.def("inverse",
        [](std::size_t n, const py::iterable& blocks) { return array(inverse(spectrum_from_python(n, blocks))); },
        py::arg("n"), py::arg("blocks"));
  m.def("degree",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, double tol) {
          return degree(payoff(f), tol);
        },
        py::arg("values"), py::arg("tol") = kDegreeTolerance);
  m.def("schatten_summary",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f) {
          return to_python(to_json(schatten_summary(transform(payoff(f)))));
        },
        py::arg("values"));
  m.def("uncertainty_check",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f) {
          return to_python(to_json(uncertainty_check(payoff(f))));
        },
        py::arg("values"));

  m.def("fairness_report",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, std::vector<Rank> members) {
          const auto p = payoff(f);
          return to_python(to_json(fairness_report(p, ordering_set(p.degree_n(), std::move(members)))));
        },
        py::arg("values"), py::arg("members"));
  m.def("lambda_plus",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, std::vector<Rank> members) {
          const auto p = payoff(f);
          return lambda_plus(p, ordering_set(p.degree_n(), std::move(members)));
        },
        py::arg("values"), py::arg("members"));
  m.def("claim1_report",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, std::vector<Rank> members) {
          const auto p = payoff(f);
          return to_python(to_json(claim1_report(p, ordering_set(p.degree_n(), std::move(members)))));
        },
        py::arg("values"), py::arg("members"));
  m.def("claim2_report",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& f, std::vector<Rank> members) {
          const auto p = payoff(f);
          return to_python(to_json(claim2_report(p, ordering_set(p.degree_n(), std::move(members)))));
        },
        py::arg("values"), py::arg("members"));

  m.def("stabilizer_set",
        [](std::size_t n, const std::vector<std::pair<int, int>>& pairs, std::size_t max_n) {
          return stabilizer_set(n, pairs, Capacity{max_n}).members();
        },
        py::arg("n"), py::arg("pairs"), py::arg("max_n") = kDefaultMaxN);
  m.def("intersection_profile",
        [](std::size_t n, std::vector<Rank> members) {
          return to_python(to_json(intersection_profile(ordering_set(n, std::move(members)))));
        },
        py::arg("n"), py::arg("members"));
  m.def("verify_indicator_degree",
        [](std::size_t n, std::vector<Rank> members) {
          return to_python(to_json(verify_indicator_degree(ordering_set(n, std::move(members)))));
        },
        py::arg("n"), py::arg("members"));

  m.def("spectrum_report",
        [](std::size_t n, std::vector<Rank> members, const std::string& normalization) {
          Normalization norm;
          if (normalization == "averaging") {
            norm = Normalization::Averaging;
          } else if (normalization == "adjacency") {
            norm = Normalization::Adjacency;
          } else {
            throw SpecError("normalization must be averaging or adjacency");
          }
          return to_python(to_json(spectrum_report(SymmetricSet(n, std::move(members)), norm)));
        },
        py::arg("n"), py::arg("members"), py::arg("normalization") = "averaging");

  m.def("valid_orderings",
        [](std::size_t n_tx, const std::vector<std::vector<int>>& validators) {
          const auto g = majority_graph(votes(n_tx, validators));
          const auto a = valid_orderings(g);
          py::dict out;
          out["members"] = a.members();
          out["stats"] = to_python(to_json(condorcet_stats(g)));
          out["intersection"] = to_python(to_json(intersection_profile(a)));
          return out;
        },
        py::arg("n_tx"), py::arg("validators"), "validators: 1-based one-line orders, position -> tx");
  m.def("simulate",
        [](std::size_t n_tx, std::size_t n_validators, const std::string& latency, std::uint64_t seed) {
          LatencyModel model;
          if (latency == "iid") {
            model = LatencyModel::iid_shuffle(seed);
          } else if (latency == "adversarial") {
            model = LatencyModel::adversarial_cycle();
          } else {
            throw SpecError("latency must be iid or adversarial");
          }
          std::vector<std::vector<int>> out;
          for (const auto& p : simulate(n_tx, n_validators, model).validators) out.push_back(p.one_line());
          return out;
        },
        py::arg("n_tx"), py::arg("n_validators"), py::arg("latency") = "iid", py::arg("seed") = 0);

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& suite, std::size_t n, std::uint64_t seed, std::size_t count, std::size_t max_n) {
          auto out = run_suite({suite, n, seed, kDegreeTolerance, Capacity{max_n}, count});
          return py::make_tuple(out.passed, to_python(out.report));
        },
        py::arg("suite"), py::arg("n") = 4, py::arg("seed") = 0, py::arg("count") = 0,
        py::arg("max_n") = kDefaultMaxN, "Returns (passed, report)");
}
