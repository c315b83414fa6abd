#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealgraph/oracle.hpp"

namespace idealgraph {

enum class Verdict { Match, Mismatch, OracleSkipped, Degenerate };

const char* verdict_name(Verdict verdict);

// One invariant's comparison.  pred/oracle are JSON values (number, bool,
// string, array or object depending on the invariant); oracle is null when
// the oracle produced no exact value.
struct InvariantEntry {
  std::string inv;
  nlohmann::ordered_json pred;
  nlohmann::ordered_json oracle;
  std::string status;  // EXACT, SKIPPED or TIMEOUT
  Verdict verdict = Verdict::Match;
};

struct InvariantReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::string case_tag;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::vector<InvariantEntry> entries;
  bool refused = false;          // graph exceeded the vertex cap
  double elapsed_seconds = 0.0;  // not persisted

  std::size_t mismatch_count() const;
  nlohmann::ordered_json to_json() const;
  static InvariantReport from_json(const nlohmann::ordered_json& j);
};

// Runs every predictor against the brute-force oracle for one pair.
InvariantReport verify_pair(const ModulePair& pair, const OracleBudget& budget = {},
                            std::size_t vertex_cap = kDefaultVertexCap);

struct VerdictTally {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t skipped = 0;
  std::size_t degenerate = 0;

  std::size_t total() const { return match + mismatch + skipped + degenerate; }
};

struct MismatchRef {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::string inv;
};

struct SweepSummary {
  std::size_t pair_count = 0;
  std::size_t refused_count = 0;
  std::map<std::string, VerdictTally> per_invariant;
  std::vector<MismatchRef> mismatches;
};

struct SweepOptions {
  std::uint64_t m_max = 2;
  OracleBudget budget;
  bool only_n_equals_m = false;
  std::size_t threads = 0;  // 0 = hardware concurrency
  std::size_t vertex_cap = kDefaultVertexCap;
};

// All m in [2, m_max] and all divisors n > 1 of m, m ascending then n
// ascending.  Pairs are verified in parallel but reports are handed to the
// sink strictly in pair order, so output is deterministic.
SweepSummary sweep(const SweepOptions& options,
                   const std::function<void(const InvariantReport&)>& sink = {});

enum class ReportFormat { Jsonl, Csv };

// Streaming writer; CSV gets its fixed header on construction, JSONL is one
// compact object per line.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format);
  void write(const InvariantReport& report);

 private:
  std::ostream& out_;
  ReportFormat format_;
};

void persist_reports(const std::vector<InvariantReport>& reports, const std::string& path,
                     ReportFormat format);

std::vector<InvariantReport> load_reports_jsonl(std::istream& in);
std::vector<InvariantReport> load_reports_csv(std::istream& in);
std::vector<InvariantReport> load_reports(const std::string& path, ReportFormat format);

}  // namespace idealgraph
