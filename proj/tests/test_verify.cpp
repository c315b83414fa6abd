#include <doctest.h>

#include <set>
#include <sstream>

#include "idealgraph/verify.hpp"

using namespace idealgraph;

namespace {

const InvariantEntry& entry(const InvariantReport& r, const std::string& inv) {
  for (const auto& e : r.entries) {
    if (e.inv == inv) return e;
  }
  REQUIRE_MESSAGE(false, "missing entry ", inv);
  static InvariantEntry dummy;
  return dummy;
}

std::string dump_jsonl(const std::vector<InvariantReport>& reports) {
  std::ostringstream out;
  ReportWriter writer(out, ReportFormat::Jsonl);
  for (const auto& r : reports) writer.write(r);
  return out.str();
}

std::string dump_csv(const std::vector<InvariantReport>& reports) {
  std::ostringstream out;
  ReportWriter writer(out, ReportFormat::Csv);
  for (const auto& r : reports) writer.write(r);
  return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("verify_pair (12,12): everything matches") {
  const auto r = verify_pair(make_module_pair(12, 12));
  CHECK(r.case_tag == "GENERAL");
  CHECK(r.vertices == 4);
  CHECK(r.edges == 4);
  CHECK(r.entries.size() == 18);
  for (const auto& e : r.entries) CHECK(e.verdict == Verdict::Match);
}

TEST_CASE("verify_pair (12,6): exceptional values match") {
  const auto r = verify_pair(make_module_pair(12, 6));
  CHECK(r.case_tag == "EXCEPTIONAL_K_A_UNION_NULL");
  CHECK(entry(r, "isolated_count").pred == 2);
  CHECK(entry(r, "independence_number").pred == 3);
  CHECK(r.mismatch_count() == 0);
  for (const auto& e : r.entries) CHECK(e.verdict == Verdict::Match);
}

TEST_CASE("verify_pair (12,2): null graph degenerates") {
  const auto r = verify_pair(make_module_pair(12, 2));
  CHECK(r.case_tag == "NULL_GRAPH");
  CHECK(entry(r, "girth").verdict == Verdict::Match);
  CHECK(entry(r, "is_forest").verdict == Verdict::Match);
  CHECK(entry(r, "is_null").verdict == Verdict::Match);
  CHECK(entry(r, "domination_number").verdict == Verdict::Degenerate);
  CHECK(entry(r, "chromatic_index").verdict == Verdict::Degenerate);
  CHECK(entry(r, "chromatic_class").verdict == Verdict::Degenerate);
  CHECK(entry(r, "eulerian_nonisolated").verdict == Verdict::Degenerate);
  CHECK(entry(r, "diameter").verdict == Verdict::Degenerate);
  CHECK(r.mismatch_count() == 0);
}

TEST_CASE("verify_pair on one-vertex graphs flags structure-blind entries") {
  const auto r = verify_pair(make_module_pair(4, 2));
  CHECK(entry(r, "universal_vertex").verdict == Verdict::Degenerate);
  CHECK(entry(r, "is_complete").verdict == Verdict::Degenerate);
  CHECK(entry(r, "is_tree").verdict == Verdict::Match);
  CHECK(r.mismatch_count() == 0);

  const auto empty = verify_pair(make_module_pair(2, 2));
  CHECK(empty.case_tag == "EMPTY");
  CHECK(empty.vertices == 0);
  CHECK(entry(empty, "no_isolated_vertex").verdict == Verdict::Degenerate);
  CHECK(empty.mismatch_count() == 0);
}

TEST_CASE("oracle skips are reported, not failed") {
  OracleBudget tiny;
  tiny.max_vertices_exact_independence = 2;
  tiny.max_vertices_exact_domination = 2;
  tiny.max_edges_edge_coloring = 1;
  const auto r = verify_pair(make_module_pair(12, 12), tiny);
  CHECK(entry(r, "independence_number").verdict == Verdict::OracleSkipped);
  CHECK(entry(r, "independence_number").status == "SKIPPED");
  CHECK(entry(r, "independence_number").oracle.is_null());
  CHECK(entry(r, "chromatic_class").verdict == Verdict::OracleSkipped);
  CHECK(r.mismatch_count() == 0);
}

TEST_CASE("vertex cap refusal becomes a REFUSED report") {
  const auto r = verify_pair(make_module_pair(12, 12), OracleBudget{}, 2);
  CHECK(r.refused);
  CHECK(r.case_tag == "REFUSED");
  CHECK(r.entries.empty());
}

TEST_CASE("sweep enumerates pairs deterministically") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  SweepOptions options;
  options.m_max = 12;
  options.threads = 1;
  const auto summary = sweep(options, [&](const InvariantReport& r) {
    seen.emplace_back(r.m, r.n);
  });
  CHECK(summary.pair_count == 23);  // sum over m <= 12 of (#divisors of m) - 1
  CHECK(seen.size() == 23);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  CHECK(seen.back() == std::pair<std::uint64_t, std::uint64_t>{12, 12});
  CHECK(summary.mismatches.empty());

  // tallies per invariant account for every pair
  for (const auto& [inv, tally] : summary.per_invariant) {
    CHECK_MESSAGE(tally.total() == summary.pair_count, "invariant ", inv);
  }

  SweepOptions one;
  one.m_max = 2;
  CHECK(sweep(one).pair_count == 1);

  SweepOptions diag;
  diag.m_max = 12;
  diag.only_n_equals_m = true;
  CHECK(sweep(diag).pair_count == 11);
}

TEST_CASE("sweep is deterministic across thread counts") {
  SweepOptions options;
  options.m_max = 100;
  options.budget.deterministic = true;

  options.threads = 1;
  std::vector<InvariantReport> serial;
  sweep(options, [&](const InvariantReport& r) { serial.push_back(r); });

  options.threads = 4;
  std::vector<InvariantReport> parallel;
  sweep(options, [&](const InvariantReport& r) { parallel.push_back(r); });

  CHECK(dump_jsonl(serial) == dump_jsonl(parallel));
}

TEST_CASE("no mismatches across a quick sweep") {
  SweepOptions options;
  options.m_max = 300;
  options.budget.deterministic = true;
  const auto summary = sweep(options);
  CHECK(summary.mismatches.empty());
  CHECK(summary.refused_count == 0);
}

TEST_CASE("jsonl round trip") {
  std::vector<InvariantReport> reports{
      verify_pair(make_module_pair(12, 12)),
      verify_pair(make_module_pair(12, 6)),
      verify_pair(make_module_pair(12, 2)),
  };
  const std::string text = dump_jsonl(reports);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);

  std::istringstream in(text);
  const auto loaded = load_reports_jsonl(in);
  REQUIRE(loaded.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(loaded[i].m == reports[i].m);
    CHECK(loaded[i].n == reports[i].n);
    CHECK(loaded[i].case_tag == reports[i].case_tag);
    CHECK(loaded[i].vertices == reports[i].vertices);
    CHECK(loaded[i].edges == reports[i].edges);
    REQUIRE(loaded[i].entries.size() == reports[i].entries.size());
    for (std::size_t k = 0; k < loaded[i].entries.size(); ++k) {
      CHECK(loaded[i].entries[k].inv == reports[i].entries[k].inv);
      CHECK(loaded[i].entries[k].pred == reports[i].entries[k].pred);
      CHECK(loaded[i].entries[k].oracle == reports[i].entries[k].oracle);
      CHECK(loaded[i].entries[k].status == reports[i].entries[k].status);
      CHECK(loaded[i].entries[k].verdict == reports[i].entries[k].verdict);
    }
  }
  CHECK(dump_jsonl(loaded) == text);
}

TEST_CASE("persist and load through files") {
  std::vector<InvariantReport> reports{
      verify_pair(make_module_pair(12, 4)),
      verify_pair(make_module_pair(30, 30)),
      verify_pair(make_module_pair(16, 2)),
  };
  const std::string path = "/tmp/idealgraph_reports_test.jsonl";
  persist_reports(reports, path, ReportFormat::Jsonl);
  const auto loaded = load_reports(path, ReportFormat::Jsonl);
  REQUIRE(loaded.size() == 3);
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].to_json() == reports[i].to_json());
  }
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(
      persist_reports(reports, "/nonexistent-dir/x.jsonl", ReportFormat::Jsonl),
      doctest::Contains("/nonexistent-dir/x.jsonl"), std::runtime_error);
  CHECK_THROWS_AS(load_reports("/nonexistent-dir/x.jsonl", ReportFormat::Jsonl),
                  std::runtime_error);
}

TEST_CASE("csv schema and round trip") {
  std::vector<InvariantReport> reports{
      verify_pair(make_module_pair(12, 12)),
      verify_pair(make_module_pair(36, 6)),
  };
  const std::string text = dump_csv(reports);
  CHECK(text.rfind("m,n,case,invariant,predicted,oracle,verdict\n", 0) == 0);

  std::istringstream in(text);
  const auto loaded = load_reports_csv(in);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].m == 12);
  CHECK(loaded[1].case_tag == "TWO_CLIQUES");
  // the CSV projection survives another serialization byte for byte
  CHECK(dump_csv(loaded) == text);

  CHECK(dump_csv({}) == "m,n,case,invariant,predicted,oracle,verdict\n");
  CHECK(dump_jsonl({}).empty());
}

TEST_SUITE_END();
