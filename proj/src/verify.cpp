#include "idealgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace idealgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json maybe_infinite(const std::optional<std::uint64_t>& v) {
  if (!v) return "inf";
  return *v;
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "MATCH") return Verdict::Match;
  if (name == "MISMATCH") return Verdict::Mismatch;
  if (name == "ORACLE_SKIPPED") return Verdict::OracleSkipped;
  if (name == "DEGENERATE") return Verdict::Degenerate;
  throw std::invalid_argument("unknown verdict: " + name);
}

}  // namespace

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::OracleSkipped: return "ORACLE_SKIPPED";
    case Verdict::Degenerate: return "DEGENERATE";
  }
  return "?";
}

std::size_t InvariantReport::mismatch_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const InvariantEntry& e) { return e.verdict == Verdict::Mismatch; }));
}

nlohmann::ordered_json InvariantReport::to_json() const {
  ordered_json j;
  j["m"] = m;
  j["n"] = n;
  j["case"] = case_tag;
  j["vertices"] = vertices;
  j["edges"] = edges;
  j["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json je;
    je["inv"] = e.inv;
    je["pred"] = e.pred;
    je["oracle"] = e.oracle;
    je["status"] = e.status;
    je["verdict"] = verdict_name(e.verdict);
    j["entries"].push_back(std::move(je));
  }
  return j;
}

InvariantReport InvariantReport::from_json(const nlohmann::ordered_json& j) {
  InvariantReport r;
  r.m = j.at("m").get<std::uint64_t>();
  r.n = j.at("n").get<std::uint64_t>();
  r.case_tag = j.at("case").get<std::string>();
  r.vertices = j.at("vertices").get<std::uint64_t>();
  r.edges = j.at("edges").get<std::uint64_t>();
  r.refused = r.case_tag == "REFUSED";
  for (const auto& je : j.at("entries")) {
    InvariantEntry e;
    e.inv = je.at("inv").get<std::string>();
    e.pred = je.at("pred");
    e.oracle = je.at("oracle");
    e.status = je.at("status").get<std::string>();
    e.verdict = verdict_from_name(je.at("verdict").get<std::string>());
    r.entries.push_back(std::move(e));
  }
  return r;
}

namespace {

struct EntryBuilder {
  std::vector<InvariantEntry>& entries;

  void exact(const std::string& inv, ordered_json pred, ordered_json oracle,
             bool degenerate = false) {
    Verdict v = degenerate          ? Verdict::Degenerate
                : (pred == oracle)  ? Verdict::Match
                                    : Verdict::Mismatch;
    entries.push_back({inv, std::move(pred), std::move(oracle), "EXACT", v});
  }

  template <typename T>
  void budgeted(const std::string& inv, ordered_json pred, const OracleResult<T>& result,
                const std::function<ordered_json(const T&)>& encode, bool degenerate) {
    ordered_json oracle;  // null unless exact
    Verdict v;
    if (result.status == OracleStatus::Exact) {
      oracle = encode(*result.value);
      v = degenerate ? Verdict::Degenerate
          : (pred == oracle) ? Verdict::Match
                             : Verdict::Mismatch;
    } else {
      v = degenerate ? Verdict::Degenerate : Verdict::OracleSkipped;
    }
    entries.push_back(
        {inv, std::move(pred), std::move(oracle), oracle_status_name(result.status), v});
  }
};

}  // namespace

InvariantReport verify_pair(const ModulePair& pair, const OracleBudget& budget,
                            std::size_t vertex_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  InvariantReport report;
  report.m = pair.m_value;
  report.n = pair.n_value;

  const PredictedInvariants pred = predict_invariants(pair);
  report.case_tag = case_tag_name(pred.tag);

  IdealGraph graph;
  try {
    graph = build_graph(pair, vertex_cap);
  } catch (const GraphSizeError&) {
    report.refused = true;
    report.case_tag = "REFUSED";
    report.vertices = pred.vertex_count;
    report.edges = 0;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  const std::size_t v_count = graph.vertex_count();
  const auto degrees = oracle_degrees(graph.adj);
  const std::size_t edge_count = graph.adj.edge_count();
  report.vertices = v_count;
  report.edges = edge_count;

  const bool edgeless = edge_count == 0;  // structural null graph
  const auto sub = induced_nonisolated(graph);

  EntryBuilder add{report.entries};

  add.exact("vertex_count", pred.vertex_count, v_count);

  const std::size_t isolated_actual = static_cast<std::size_t>(
      std::count(degrees.begin(), degrees.end(), std::size_t{0}));
  add.exact("isolated_count", pred.isolated_count, isolated_actual);

  {
    ordered_json pred_profile = ordered_json::array();
    for (const auto& d : graph.vertices) {
      pred_profile.push_back(predicted_degree(pair, d));
    }
    add.exact("degree_profile", std::move(pred_profile), degrees);
  }

  add.exact("girth", maybe_infinite(pred.girth), maybe_infinite(oracle_girth(graph.adj)));

  const std::size_t max_degree_actual =
      degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  add.exact("max_degree", pred.max_degree, max_degree_actual);

  add.budgeted<std::uint64_t>(
      "independence_number", pred.independence_number,
      oracle_independence(graph.adj, budget),
      [](const std::uint64_t& v) { return ordered_json(v); }, false);

  add.budgeted<std::uint64_t>(
      "domination_number", pred.domination_number, oracle_domination(graph.adj, budget),
      [](const std::uint64_t& v) { return ordered_json(v); }, edgeless);

  // The characterizations below compare adjacency structure; on graphs with
  // at most one vertex the pairs (m, n) and (m, m) share the same graph, so
  // the value of n cannot be read off the structure and the comparison is
  // flagged DEGENERATE instead.
  add.exact("universal_vertex", pred.has_universal_vertex,
            oracle_has_universal_vertex(graph.adj), v_count <= 1);
  add.exact("is_complete", pred.is_complete, oracle_is_complete(graph.adj), v_count <= 1);
  add.exact("no_isolated_vertex", pred.no_isolated_vertex, oracle_no_isolated(graph.adj),
            v_count == 0);

  add.exact("is_null", pred.is_null, edgeless);
  add.exact("is_forest", pred.is_forest, oracle_is_forest(graph.adj));
  add.exact("is_tree", pred.is_tree, oracle_is_tree(graph.adj));
  add.exact("is_star", pred.is_star, oracle_is_star(graph.adj));

  {
    const auto coloring = oracle_chromatic_index_class(graph.adj, budget);
    OracleResult<std::uint64_t> chi;
    chi.status = coloring.status;
    chi.nodes_expanded = coloring.nodes_expanded;
    if (coloring.status == OracleStatus::Exact) {
      chi.value = max_degree_actual +
                  (*coloring.value == EdgeColorClass::Class2 ? 1 : 0);
    }
    add.budgeted<std::uint64_t>(
        "chromatic_index", pred.chromatic_index, chi,
        [](const std::uint64_t& v) { return ordered_json(v); }, edgeless);
    add.budgeted<EdgeColorClass>(
        "chromatic_class", edge_color_class_name(pred.chromatic_class), coloring,
        [](const EdgeColorClass& c) { return ordered_json(edge_color_class_name(c)); },
        edgeless);
  }

  add.exact("eulerian_nonisolated", pred.eulerian_nonisolated,
            oracle_eulerian_nonisolated(graph.adj), edgeless);

  {
    const auto cd = oracle_components_and_diameter(sub.graph);
    ordered_json oracle;
    oracle["components"] = cd.components;
    oracle["diameter"] = maybe_infinite(cd.diameter);

    bool holds = false;
    switch (pred.diameter_note) {
      case DiameterNote::Degenerate:
        holds = edgeless;
        break;
      case DiameterNote::Clique:
        holds = cd.components == 1 && oracle_is_complete(sub.graph);
        break;
      case DiameterNote::BoundLe2:
        holds = cd.components == 1 && cd.diameter && *cd.diameter <= 2;
        break;
      case DiameterNote::BoundLe4:
        holds = cd.components == 1 && cd.diameter && *cd.diameter <= 4;
        break;
      case DiameterNote::DisconnectedTwoCliques:
        holds = oracle_matches_two_cliques(sub.graph, pair.alpha()[0], pair.alpha()[1]);
        break;
    }
    report.entries.push_back({"diameter", diameter_note_name(pred.diameter_note),
                              std::move(oracle), "EXACT",
                              edgeless            ? Verdict::Degenerate
                              : holds             ? Verdict::Match
                                                  : Verdict::Mismatch});
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

void accumulate(SweepSummary& summary, const InvariantReport& report) {
  ++summary.pair_count;
  if (report.refused) {
    ++summary.refused_count;
    return;
  }
  for (const auto& e : report.entries) {
    VerdictTally& t = summary.per_invariant[e.inv];
    switch (e.verdict) {
      case Verdict::Match: ++t.match; break;
      case Verdict::Mismatch:
        ++t.mismatch;
        summary.mismatches.push_back({report.m, report.n, e.inv});
        break;
      case Verdict::OracleSkipped: ++t.skipped; break;
      case Verdict::Degenerate: ++t.degenerate; break;
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sweep_pairs(const SweepOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t m = 2; m <= options.m_max; ++m) {
    if (options.only_n_equals_m) {
      pairs.emplace_back(m, m);
      continue;
    }
    const ModulePair base = make_module_pair(m, m);
    std::vector<std::uint64_t> values;
    for (const auto& d : enumerate_divisors(base)) {
      const std::uint64_t v = divisor_value(base, d);
      if (v > 1) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    for (std::uint64_t n : values) pairs.emplace_back(m, n);
  }
  return pairs;
}

}  // namespace

SweepSummary sweep(const SweepOptions& options,
                   const std::function<void(const InvariantReport&)>& sink) {
  if (options.m_max < 2) throw std::domain_error("sweep: m_max must be at least 2");
  const auto pairs = sweep_pairs(options);

  SweepSummary summary;
  auto run_one = [&](std::size_t i) {
    const auto [m, n] = pairs[i];
    return verify_pair(make_module_pair(m, n), options.budget, options.vertex_cap);
  };

  std::size_t threads = options.threads != 0
                            ? options.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, pairs.size());

  if (threads <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const InvariantReport report = run_one(i);
      accumulate(summary, report);
      if (sink) sink(report);
    }
    return summary;
  }

  // Workers pull pair indices; the main thread emits strictly in pair order.
  std::vector<std::optional<InvariantReport>> slots(pairs.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::condition_variable ready_cv;

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pairs.size()) return;
        InvariantReport report = run_one(i);
        {
          std::lock_guard<std::mutex> lock(mutex);
          slots[i] = std::move(report);
        }
        ready_cv.notify_all();
      }
    });
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::unique_lock<std::mutex> lock(mutex);
    ready_cv.wait(lock, [&] { return slots[i].has_value(); });
    InvariantReport report = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    accumulate(summary, report);
    if (sink) sink(report);
  }
  for (auto& worker : pool) worker.join();
  return summary;
}

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const ordered_json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

constexpr const char* kCsvHeader = "m,n,case,invariant,predicted,oracle,verdict";

}  // namespace

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format)
    : out_(out), format_(format) {
  if (format_ == ReportFormat::Csv) out_ << kCsvHeader << '\n';
}

void ReportWriter::write(const InvariantReport& report) {
  if (format_ == ReportFormat::Jsonl) {
    out_ << report.to_json().dump() << '\n';
    return;
  }
  for (const auto& e : report.entries) {
    out_ << report.m << ',' << report.n << ',' << csv_escape(report.case_tag) << ','
         << csv_escape(e.inv) << ',' << csv_escape(csv_cell(e.pred)) << ','
         << csv_escape(csv_cell(e.oracle)) << ',' << verdict_name(e.verdict) << '\n';
  }
}

void persist_reports(const std::vector<InvariantReport>& reports, const std::string& path,
                     ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  ReportWriter writer(out, format);
  for (const auto& r : reports) writer.write(r);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<InvariantReport> load_reports_jsonl(std::istream& in) {
  std::vector<InvariantReport> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(InvariantReport::from_json(ordered_json::parse(line)));
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

ordered_json cell_to_json(const std::string& cell) {
  if (cell.empty()) return nullptr;
  ordered_json parsed = ordered_json::parse(cell, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) return cell;  // plain string payload
  return parsed;
}

}  // namespace

std::vector<InvariantReport> load_reports_csv(std::istream& in) {
  std::vector<InvariantReport> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);
      continue;
    }
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 7) throw std::runtime_error("malformed CSV row: " + line);
    const std::uint64_t m = std::stoull(cells[0]);
    const std::uint64_t n = std::stoull(cells[1]);
    if (out.empty() || out.back().m != m || out.back().n != n) {
      InvariantReport r;
      r.m = m;
      r.n = n;
      r.case_tag = cells[2];
      r.refused = r.case_tag == "REFUSED";
      out.push_back(std::move(r));
    }
    InvariantEntry e;
    e.inv = cells[3];
    e.pred = cell_to_json(cells[4]);
    e.oracle = cell_to_json(cells[5]);
    e.status = "";  // not part of the CSV schema
    e.verdict = verdict_from_name(cells[6]);
    out.back().entries.push_back(std::move(e));
  }
  return out;
}

std::vector<InvariantReport> load_reports(const std::string& path, ReportFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return format == ReportFormat::Jsonl ? load_reports_jsonl(in) : load_reports_csv(in);
}

}  // namespace idealgraph
