#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/arithmetic.hpp"

namespace idealgraph {

// Shape of the pair (m, n), evaluated in this fixed precedence order; every
// closed-form invariant dispatches on the first matching tag.
enum class CaseTag {
  Empty,                    // no vertices (m prime)
  NullGraph,                // edgeless by the null-graph characterization
  ExceptionalCliquePlusNull,// n = p1*p2, m = p1^a1 * p2 with a1 >= 2
  TwoCliques,               // n = p1*p2, m = p1^a1 * p2^a2 with a1, a2 >= 2
  Radical,                  // n = p1*...*ps (all beta = 1), s >= 3
  PrimePowerModule,         // n = p1^b1 (single prime in n)
  General,
};

const char* case_tag_name(CaseTag tag);

enum class EdgeColorClass { Class1, Class2 };  // chi' = Delta vs Delta + 1

const char* edge_color_class_name(EdgeColorClass cls);

// What the closed forms say about diam(G \ A) for non-null graphs.
enum class DiameterNote {
  Degenerate,             // null/empty graph, nothing to bound
  Clique,                 // G \ A complete, diameter <= 1
  BoundLe2,               // connected with diameter <= 2
  BoundLe4,               // connected with diameter <= 4
  DisconnectedTwoCliques, // G \ A = K_a1 + K_a2
};

const char* diameter_note_name(DiameterNote note);

// Every invariant the closed forms produce for a pair, computed purely from
// (alpha, beta) without building the graph.  Degenerate flags mark values the
// characterizations exclude (null/empty graphs) but that sweeps still report.
struct PredictedInvariants {
  CaseTag tag = CaseTag::General;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  bool is_null = false;
  std::uint64_t isolated_count = 0;
  std::optional<std::uint64_t> girth;  // 3 or nullopt (= infinite)
  std::uint64_t max_degree = 0;
  std::uint64_t independence_number = 0;
  std::uint64_t domination_number = 0;
  bool is_forest = false;
  bool is_tree = false;
  bool is_star = false;
  bool is_complete = false;
  bool has_universal_vertex = false;
  bool no_isolated_vertex = false;
  std::uint64_t chromatic_index = 0;
  EdgeColorClass chromatic_class = EdgeColorClass::Class1;
  bool eulerian_nonisolated = false;
  DiameterNote diameter_note = DiameterNote::Degenerate;
  bool degenerate = false;  // tag is Empty or NullGraph
};

CaseTag classify(const ModulePair& pair);

std::uint64_t predicted_vertex_count(const ModulePair& pair);
std::uint64_t predicted_degree(const ModulePair& pair, const DivisorVector& d);
std::uint64_t predicted_edge_count(const ModulePair& pair);
std::uint64_t predicted_isolated_count(const ModulePair& pair);
std::optional<std::uint64_t> predicted_girth(const ModulePair& pair);
bool predicted_is_forest(const ModulePair& pair);
bool predicted_is_tree(const ModulePair& pair);
bool predicted_is_star(const ModulePair& pair);
bool predicted_is_null(const ModulePair& pair);
std::uint64_t predicted_max_degree(const ModulePair& pair);
std::uint64_t predicted_independence_number(const ModulePair& pair);
std::uint64_t predicted_domination_number(const ModulePair& pair);
bool predicted_universal_vertex(const ModulePair& pair);
bool predicted_is_complete(const ModulePair& pair);
bool predicted_no_isolated(const ModulePair& pair);

struct ChromaticIndex {
  std::uint64_t max_degree = 0;
  EdgeColorClass cls = EdgeColorClass::Class1;
  std::uint64_t value() const {
    return max_degree + (cls == EdgeColorClass::Class2 ? 1 : 0);
  }
};

ChromaticIndex predicted_chromatic_index(const ModulePair& pair);
bool predicted_eulerian_nonisolated(const ModulePair& pair);
DiameterNote predicted_diameter_note(const ModulePair& pair);

PredictedInvariants predict_invariants(const ModulePair& pair);

// One line of `explain` output: an invariant, its value, the stable clause
// identifier that produced it, and a short human-readable detail.
struct ExplainEntry {
  std::string invariant;
  std::string value;
  std::string clause;
  std::string detail;
};

std::vector<ExplainEntry> explain_pair(const ModulePair& pair);

}  // namespace idealgraph
