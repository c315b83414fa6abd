#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <sstream>

#include "idealgraph/formulas.hpp"
#include "idealgraph/graph.hpp"
#include "idealgraph/verify.hpp"

namespace py = pybind11;
using namespace idealgraph;

namespace {

DivisorVector as_divisor(const std::vector<std::uint32_t>& exponents) {
  return DivisorVector{exponents};
}

py::object girth_to_py(const std::optional<std::uint64_t>& g) {
  if (!g) return py::none();
  return py::int_(*g);
}

py::dict predict_dict(const ModulePair& pair) {
  const PredictedInvariants inv = predict_invariants(pair);
  py::dict d;
  d["case"] = case_tag_name(inv.tag);
  d["vertex_count"] = inv.vertex_count;
  d["edge_count"] = inv.edge_count;
  d["is_null"] = inv.is_null;
  d["isolated_count"] = inv.isolated_count;
  d["girth"] = girth_to_py(inv.girth);
  d["max_degree"] = inv.max_degree;
  d["independence_number"] = inv.independence_number;
  d["domination_number"] = inv.domination_number;
  d["is_forest"] = inv.is_forest;
  d["is_tree"] = inv.is_tree;
  d["is_star"] = inv.is_star;
  d["is_complete"] = inv.is_complete;
  d["universal_vertex"] = inv.has_universal_vertex;
  d["no_isolated_vertex"] = inv.no_isolated_vertex;
  d["chromatic_index"] = inv.chromatic_index;
  d["chromatic_class"] = edge_color_class_name(inv.chromatic_class);
  d["eulerian_nonisolated"] = inv.eulerian_nonisolated;
  d["diameter_note"] = diameter_note_name(inv.diameter_note);
  d["degenerate"] = inv.degenerate;
  return d;
}

template <typename T, typename Encode>
py::dict oracle_result_dict(const OracleResult<T>& r, Encode encode) {
  py::dict d;
  d["status"] = oracle_status_name(r.status);
  d["value"] = r.status == OracleStatus::Exact ? py::object(encode(*r.value)) : py::none();
  d["nodes_expanded"] = r.nodes_expanded;
  return d;
}

py::dict summary_dict(const SweepSummary& summary) {
  py::dict d;
  d["pairs"] = summary.pair_count;
  d["refused"] = summary.refused_count;
  py::dict per;
  std::size_t mismatch_total = 0;
  for (const auto& [inv, tally] : summary.per_invariant) {
    py::dict t;
    t["match"] = tally.match;
    t["mismatch"] = tally.mismatch;
    t["skipped"] = tally.skipped;
    t["degenerate"] = tally.degenerate;
    per[py::str(inv)] = t;
    mismatch_total += tally.mismatch;
  }
  d["per_invariant"] = per;
  d["mismatch_total"] = mismatch_total;
  py::list misses;
  for (const auto& miss : summary.mismatches) {
    misses.append(py::make_tuple(miss.m, miss.n, miss.inv));
  }
  d["mismatches"] = misses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intersection graphs G_n(Z_m) of ideals of Z_m: construction, closed-form "
            "invariants and brute-force verification.";

  py::register_exception<GraphSizeError>(m, "GraphSizeError", PyExc_ValueError);

  py::class_<Factorization>(m, "Factorization")
      .def_readonly("primes", &Factorization::primes)
      .def_readonly("exponents", &Factorization::exponents)
      .def("value", &Factorization::value)
      .def("__repr__", [](const Factorization& f) {
        std::ostringstream out;
        out << "Factorization(";
        for (std::size_t i = 0; i < f.primes.size(); ++i) {
          if (i) out << " * ";
          out << f.primes[i] << "^" << f.exponents[i];
        }
        out << ")";
        return out.str();
      });

  m.def("factorize", &factorize, py::arg("m"), py::arg("max_m") = kDefaultMaxModulus,
        "Prime factorization by trial division.");

  py::class_<ModulePair>(m, "ModulePair")
      .def_property_readonly("m", [](const ModulePair& p) { return p.m_value; })
      .def_property_readonly("n", [](const ModulePair& p) { return p.n_value; })
      .def_property_readonly("alpha", [](const ModulePair& p) { return p.alpha(); })
      .def_property_readonly("beta", [](const ModulePair& p) { return p.beta; })
      .def_property_readonly("primes",
                             [](const ModulePair& p) { return p.m_fact.primes; })
      .def("module_support", &ModulePair::module_support)
      .def("module_support_size", &ModulePair::module_support_size)
      .def("module_is_radical", &ModulePair::module_is_radical)
      .def("__repr__", [](const ModulePair& p) {
        return "ModulePair(m=" + std::to_string(p.m_value) +
               ", n=" + std::to_string(p.n_value) + ")";
      });

  m.def("make_module_pair", &make_module_pair, py::arg("m"), py::arg("n"),
        py::arg("max_m") = kDefaultMaxModulus,
        "The pair (m, n) with n | m; raises ValueError otherwise.");

  m.def("enumerate_divisors",
        [](const ModulePair& pair) {
          std::vector<std::vector<std::uint32_t>> out;
          for (const auto& d : enumerate_divisors(pair)) out.push_back(d.r);
          return out;
        },
        py::arg("pair"), "All divisor exponent vectors of m in lexicographic order.");
  m.def("divisor_value",
        [](const ModulePair& pair, const std::vector<std::uint32_t>& e) {
          return divisor_value(pair, as_divisor(e));
        },
        py::arg("pair"), py::arg("exponents"));
  m.def("lcm_vector",
        [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
          return lcm_vector(as_divisor(a), as_divisor(b)).r;
        },
        py::arg("a"), py::arg("b"));
  m.def("n_divides",
        [](const ModulePair& pair, const std::vector<std::uint32_t>& e) {
          return n_divides(pair, as_divisor(e));
        },
        py::arg("pair"), py::arg("exponents"));
  m.def("d_support",
        [](const ModulePair& pair, const std::vector<std::uint32_t>& e) {
          return d_support(pair, as_divisor(e));
        },
        py::arg("pair"), py::arg("exponents"));
  m.def("adjacent",
        [](const ModulePair& pair, const std::vector<std::uint32_t>& a,
           const std::vector<std::uint32_t>& b) {
          return adjacent(pair, as_divisor(a), as_divisor(b));
        },
        py::arg("pair"), py::arg("d1"), py::arg("d2"),
        "Adjacency criterion: n does not divide lcm(d1, d2).");

  py::class_<IdealGraph>(m, "IdealGraph")
      .def_property_readonly("pair", [](const IdealGraph& g) { return g.pair; })
      .def("vertex_count", &IdealGraph::vertex_count)
      .def_property_readonly("vertex_values",
                             [](const IdealGraph& g) { return g.vertex_values; })
      .def("vertex_exponents",
           [](const IdealGraph& g) {
             std::vector<std::vector<std::uint32_t>> out;
             for (const auto& d : g.vertices) out.push_back(d.r);
             return out;
           })
      .def("edges", [](const IdealGraph& g) { return g.adj.edges(); })
      .def("edge_count", [](const IdealGraph& g) { return g.adj.edge_count(); })
      .def("adjacent",
           [](const IdealGraph& g, std::size_t u, std::size_t v) {
             return g.adj.adjacent(u, v);
           })
      .def("degrees", [](const IdealGraph& g) { return oracle_degrees(g.adj); })
      .def("isolated",
           [](const IdealGraph& g) {
             std::vector<std::size_t> out;
             const auto flags = isolated_set(g);
             for (std::size_t u = 0; u < flags.size(); ++u) {
               if (flags[u]) out.push_back(u);
             }
             return out;
           })
      .def("to_dot", [](const IdealGraph& g) { return to_dot(g); })
      .def("to_json", [](const IdealGraph& g) { return to_json(g); })
      .def("__repr__", [](const IdealGraph& g) {
        return "IdealGraph(m=" + std::to_string(g.pair.m_value) +
               ", n=" + std::to_string(g.pair.n_value) +
               ", vertices=" + std::to_string(g.vertex_count()) + ")";
      });

  m.def("build_graph", &build_graph, py::arg("pair"),
        py::arg("vertex_cap") = kDefaultVertexCap);

  m.def("classify",
        [](const ModulePair& pair) { return std::string(case_tag_name(classify(pair))); });
  m.def("predict_invariants", &predict_dict, py::arg("pair"),
        "Every closed-form invariant, computed without building the graph.");
  m.def("predicted_degree",
        [](const ModulePair& pair, const std::vector<std::uint32_t>& e) {
          return predicted_degree(pair, as_divisor(e));
        },
        py::arg("pair"), py::arg("exponents"));
  m.def("explain",
        [](const ModulePair& pair) {
          py::list out;
          for (const auto& e : explain_pair(pair)) {
            py::dict d;
            d["invariant"] = e.invariant;
            d["value"] = e.value;
            d["clause"] = e.clause;
            d["detail"] = e.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("pair"), "Invariants tagged with the clause that produced them.");

  py::class_<OracleBudget>(m, "OracleBudget")
      .def(py::init<>())
      .def_readwrite("max_vertices_exact_independence",
                     &OracleBudget::max_vertices_exact_independence)
      .def_readwrite("max_vertices_exact_domination",
                     &OracleBudget::max_vertices_exact_domination)
      .def_readwrite("max_edges_edge_coloring", &OracleBudget::max_edges_edge_coloring)
      .def_readwrite("max_nodes_per_invariant", &OracleBudget::max_nodes_per_invariant)
      .def_readwrite("deterministic", &OracleBudget::deterministic)
      .def_property(
          "timeout_ms",
          [](const OracleBudget& b) {
            return static_cast<std::uint64_t>(b.timeout_per_invariant.count());
          },
          [](OracleBudget& b, std::uint64_t ms) {
            b.timeout_per_invariant = std::chrono::milliseconds(ms);
          });

  m.def("oracle_degrees", [](const IdealGraph& g) { return oracle_degrees(g.adj); });
  m.def("oracle_girth", [](const IdealGraph& g) { return girth_to_py(oracle_girth(g.adj)); });
  m.def("oracle_independence",
        [](const IdealGraph& g, const OracleBudget& budget) {
          return oracle_result_dict(oracle_independence(g.adj, budget),
                                    [](std::uint64_t v) { return py::int_(v); });
        },
        py::arg("graph"), py::arg("budget") = OracleBudget{});
  m.def("oracle_domination",
        [](const IdealGraph& g, const OracleBudget& budget) {
          return oracle_result_dict(oracle_domination(g.adj, budget),
                                    [](std::uint64_t v) { return py::int_(v); });
        },
        py::arg("graph"), py::arg("budget") = OracleBudget{});
  m.def("oracle_chromatic_index_class",
        [](const IdealGraph& g, const OracleBudget& budget) {
          return oracle_result_dict(oracle_chromatic_index_class(g.adj, budget),
                                    [](EdgeColorClass c) {
                                      return py::str(edge_color_class_name(c));
                                    });
        },
        py::arg("graph"), py::arg("budget") = OracleBudget{});
  m.def("oracle_eulerian_nonisolated",
        [](const IdealGraph& g) { return oracle_eulerian_nonisolated(g.adj); });

  py::class_<InvariantReport>(m, "InvariantReport")
      .def_property_readonly("m", [](const InvariantReport& r) { return r.m; })
      .def_property_readonly("n", [](const InvariantReport& r) { return r.n; })
      .def_property_readonly("case", [](const InvariantReport& r) { return r.case_tag; })
      .def_property_readonly("vertices", [](const InvariantReport& r) { return r.vertices; })
      .def_property_readonly("edges", [](const InvariantReport& r) { return r.edges; })
      .def_property_readonly("refused", [](const InvariantReport& r) { return r.refused; })
      .def("mismatch_count", &InvariantReport::mismatch_count)
      .def("to_json", [](const InvariantReport& r) { return r.to_json().dump(); })
      .def("__repr__", [](const InvariantReport& r) {
        return "InvariantReport(m=" + std::to_string(r.m) + ", n=" + std::to_string(r.n) +
               ", mismatches=" + std::to_string(r.mismatch_count()) + ")";
      });

  m.def("verify_pair",
        [](std::uint64_t m_value, std::uint64_t n_value, const OracleBudget& budget) {
          return verify_pair(make_module_pair(m_value, n_value), budget);
        },
        py::arg("m"), py::arg("n"), py::arg("budget") = OracleBudget{},
        "Formulas vs brute-force oracle for one pair.");

  m.def("sweep",
        [](std::uint64_t m_max, const OracleBudget& budget, bool only_n_equals_m,
           std::size_t threads, const std::string& out,
           const std::string& format) {
          SweepOptions options;
          options.m_max = m_max;
          options.budget = budget;
          options.only_n_equals_m = only_n_equals_m;
          options.threads = threads;
          SweepSummary summary;
          if (out.empty()) {
            summary = sweep(options);
          } else {
            std::ofstream file(out, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open for writing: " + out);
            ReportWriter writer(file, format == "csv" ? ReportFormat::Csv
                                                      : ReportFormat::Jsonl);
            summary = sweep(options,
                            [&](const InvariantReport& r) { writer.write(r); });
          }
          return summary_dict(summary);
        },
        py::arg("m_max"), py::arg("budget") = OracleBudget{},
        py::arg("only_n_equals_m") = false, py::arg("threads") = std::size_t{0},
        py::arg("out") = std::string(), py::arg("format") = std::string("jsonl"),
        "Verify all pairs with m up to m_max; optionally persist reports.");
}
