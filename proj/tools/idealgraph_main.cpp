#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "idealgraph/formulas.hpp"
#include "idealgraph/graph.hpp"
#include "idealgraph/verify.hpp"

namespace {

using namespace idealgraph;

// Exit codes: 0 success / all match, 1 mismatch found, 2 usage or domain
// error, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void add_budget_options(CLI::App* cmd, OracleBudget& budget, bool* deterministic) {
  cmd->add_option("--max-independence-vertices", budget.max_vertices_exact_independence,
                  "Vertex cap for the exact independence oracle")
      ->envname("IDEALGRAPH_BUDGET_INDEPENDENCE_VERTICES");
  cmd->add_option("--max-domination-vertices", budget.max_vertices_exact_domination,
                  "Vertex cap for the exact domination oracle")
      ->envname("IDEALGRAPH_BUDGET_DOMINATION_VERTICES");
  cmd->add_option("--max-coloring-edges", budget.max_edges_edge_coloring,
                  "Edge cap for the exact edge-coloring oracle")
      ->envname("IDEALGRAPH_BUDGET_COLORING_EDGES");
  cmd->add_option_function<std::uint64_t>(
         "--timeout-ms",
         [&budget](const std::uint64_t& ms) {
           budget.timeout_per_invariant = std::chrono::milliseconds(ms);
         },
         "Wall-clock guard per oracle invocation (ignored with --deterministic)")
      ->envname("IDEALGRAPH_BUDGET_TIMEOUT_MS");
  cmd->add_option("--max-nodes", budget.max_nodes_per_invariant,
                  "Expanded-node cap per oracle invocation")
      ->envname("IDEALGRAPH_BUDGET_MAX_NODES");
  cmd->add_flag("--deterministic", *deterministic,
                "Budget by node counts only; output becomes run-to-run identical");
}

ModulePair parse_pair(std::uint64_t m, std::uint64_t n) {
  try {
    return make_module_pair(m, n);
  } catch (const std::domain_error&) {
    throw std::domain_error("n must divide m, both > 1");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_analyze(std::uint64_t m, std::uint64_t n) {
  const ModulePair pair = parse_pair(m, n);
  const PredictedInvariants inv = predict_invariants(pair);

  std::cout << "G_" << n << "(Z_" << m << ")  [case " << case_tag_name(inv.tag) << "]\n";
  if (inv.tag == CaseTag::Empty) {
    std::cout << "  empty graph: m is prime, there are no proper nonzero ideals\n";
  } else if (inv.is_null) {
    std::cout << "  null graph on " << inv.vertex_count << " vertices (no edges)\n";
  }

  auto row = [](const std::string& name, const std::string& value) {
    std::cout << "  " << std::left << std::setw(22) << name << value << "\n";
  };
  row("vertices", std::to_string(inv.vertex_count));
  row("edges", std::to_string(inv.edge_count));
  row("isolated |A|", std::to_string(inv.isolated_count));
  row("girth", inv.girth ? std::to_string(*inv.girth) : "inf");
  row("max degree", std::to_string(inv.max_degree));
  row("independence number", std::to_string(inv.independence_number));
  row("domination number", std::to_string(inv.domination_number) +
                               (inv.degenerate ? " (degenerate)" : ""));
  row("chromatic index", std::to_string(inv.chromatic_index) + " (" +
                             edge_color_class_name(inv.chromatic_class) + ")" +
                             (inv.degenerate ? " (degenerate)" : ""));
  row("eulerian G\\A", yes_no(inv.eulerian_nonisolated));
  row("diameter note", diameter_note_name(inv.diameter_note));
  row("forest / tree / star", yes_no(inv.is_forest) + " / " + yes_no(inv.is_tree) + " / " +
                                  yes_no(inv.is_star));
  row("complete", yes_no(inv.is_complete));
  row("universal vertex", yes_no(inv.has_universal_vertex));
  row("no isolated vertex", yes_no(inv.no_isolated_vertex));
  return kExitOk;
}

int run_explain(std::uint64_t m, std::uint64_t n) {
  const ModulePair pair = parse_pair(m, n);
  for (const auto& e : explain_pair(pair)) {
    std::cout << e.invariant << " = " << e.value << "  [" << e.clause << "] " << e.detail
              << "\n";
  }
  return kExitOk;
}

int run_verify(std::uint64_t m, std::uint64_t n, const OracleBudget& budget) {
  const ModulePair pair = parse_pair(m, n);
  const InvariantReport report = verify_pair(pair, budget);
  std::cout << "pair (" << m << ", " << n << ")  case " << report.case_tag << "  vertices "
            << report.vertices << "  edges " << report.edges << "\n";
  for (const auto& e : report.entries) {
    std::cout << "  " << std::left << std::setw(22) << e.inv << std::setw(16)
              << verdict_name(e.verdict) << " pred=" << e.pred.dump()
              << " oracle=" << e.oracle.dump() << " [" << e.status << "]\n";
  }
  const std::size_t mismatches = report.mismatch_count();
  std::cout << (mismatches == 0 ? "all invariants consistent" : "MISMATCHES FOUND") << "\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_sweep(const SweepOptions& options, const std::string& out_path, ReportFormat format) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
    out = &file;
  }
  ReportWriter writer(*out, format);
  const SweepSummary summary =
      sweep(options, [&](const InvariantReport& r) { writer.write(r); });
  out->flush();
  if (!*out) throw std::runtime_error("write failed: " + out_path);

  std::cerr << "pairs " << summary.pair_count << ", refused " << summary.refused_count
            << "\n";
  for (const auto& [inv, tally] : summary.per_invariant) {
    std::cerr << "  " << std::left << std::setw(22) << inv << " match " << tally.match
              << "  mismatch " << tally.mismatch << "  skipped " << tally.skipped
              << "  degenerate " << tally.degenerate << "\n";
  }
  for (const auto& miss : summary.mismatches) {
    std::cerr << "MISMATCH m=" << miss.m << " n=" << miss.n << " " << miss.inv << "\n";
  }
  return summary.mismatches.empty() ? kExitOk : kExitMismatch;
}

int run_export(std::uint64_t m, std::uint64_t n, const std::string& format,
               const std::string& out_path) {
  const ModulePair pair = parse_pair(m, n);
  const IdealGraph graph = build_graph(pair);
  const std::string payload = format == "dot" ? to_dot(graph) : to_json(graph) + "\n";
  if (out_path == "-") {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
  file << payload;
  file.flush();
  if (!file) throw std::runtime_error("write failed: " + out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection graphs G_n(Z_m) of ideals of Z_m: closed-form invariants "
               "checked against brute-force oracles"};
  app.require_subcommand(1);

  std::uint64_t m = 0;
  std::uint64_t n = 0;
  OracleBudget budget;
  bool deterministic = false;

  auto* analyze = app.add_subcommand("analyze", "Print the closed-form invariant table");
  analyze->add_option("--m", m, "Modulus m > 1")->required();
  analyze->add_option("--n", n, "Module order n > 1, must divide m")->required();

  auto* explain =
      app.add_subcommand("explain", "Tag every invariant with the clause it came from");
  explain->add_option("--m", m)->required();
  explain->add_option("--n", n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the closed forms against the oracle");
  verify_cmd->add_option("--m", m)->required();
  verify_cmd->add_option("--n", n)->required();
  add_budget_options(verify_cmd, budget, &deterministic);

  SweepOptions sweep_options;
  std::string out_path = "-";
  std::string format_name = "jsonl";
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every pair with m up to a bound");
  sweep_cmd->add_option("--m-max", sweep_options.m_max, "Largest modulus to sweep")
      ->required();
  sweep_cmd->add_option("--out", out_path, "Output path ('-' for stdout)");
  sweep_cmd->add_option("--format", format_name, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  sweep_cmd->add_flag("--only-n-eq-m", sweep_options.only_n_equals_m,
                      "Sweep only the pairs with n = m");
  sweep_cmd->add_option("--threads", sweep_options.threads, "Worker threads (0 = auto)");
  sweep_cmd->add_option("--vertex-cap", sweep_options.vertex_cap,
                        "Refuse graphs with more vertices than this");
  add_budget_options(sweep_cmd, sweep_options.budget, &deterministic);

  std::string export_format = "dot";
  auto* export_cmd = app.add_subcommand("export", "Write the graph as DOT or JSON");
  export_cmd->add_option("--m", m)->required();
  export_cmd->add_option("--n", n)->required();
  export_cmd->add_option("--format", export_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_path, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  budget.deterministic = deterministic;
  sweep_options.budget.deterministic = deterministic;

  try {
    if (*analyze) return run_analyze(m, n);
    if (*explain) return run_explain(m, n);
    if (*verify_cmd) return run_verify(m, n, budget);
    if (*sweep_cmd) {
      const ReportFormat format =
          format_name == "csv" ? ReportFormat::Csv : ReportFormat::Jsonl;
      return run_sweep(sweep_options, out_path, format);
    }
    if (*export_cmd) return run_export(m, n, export_format, out_path);
  } catch (const GraphSizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
