#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "idealgraph/formulas.hpp"
#include "idealgraph/graph.hpp"

namespace idealgraph {

// Work limits for the exponential-time exact solvers.  Exceeding a vertex or
// edge cap yields SKIPPED before any search; exhausting the node budget (or
// the wall clock, unless deterministic) yields TIMEOUT.  Never a wrong value.
struct OracleBudget {
  std::size_t max_vertices_exact_independence = 26;
  std::size_t max_vertices_exact_domination = 24;
  std::size_t max_edges_edge_coloring = 48;
  std::chrono::milliseconds timeout_per_invariant{10'000};
  std::uint64_t max_nodes_per_invariant = 50'000'000;
  // When set, budgets are measured by expanded-node counts only, so two runs
  // with identical inputs produce identical statuses.
  bool deterministic = false;
};

enum class OracleStatus { Exact, Skipped, Timeout };

const char* oracle_status_name(OracleStatus status);

template <typename T>
struct OracleResult {
  OracleStatus status = OracleStatus::Skipped;
  std::optional<T> value;  // present iff status == Exact
  std::uint64_t nodes_expanded = 0;

  static OracleResult exact(T v, std::uint64_t nodes = 0) {
    return {OracleStatus::Exact, std::move(v), nodes};
  }
  static OracleResult skipped() { return {OracleStatus::Skipped, std::nullopt, 0}; }
  static OracleResult timeout(std::uint64_t nodes) {
    return {OracleStatus::Timeout, std::nullopt, nodes};
  }
};

// Degree per vertex (adjacency row sums).
std::vector<std::size_t> oracle_degrees(const DenseGraph& g);

// Exact girth via BFS from every vertex; nullopt when acyclic.
std::optional<std::uint64_t> oracle_girth(const DenseGraph& g);

// Exact maximum independent set by branch and bound (greedy clique-cover
// upper bounds) over the non-isolated part, plus the isolated-vertex count.
OracleResult<std::uint64_t> oracle_independence(const DenseGraph& g, const OracleBudget& budget);

// Exact minimum dominating set: branch on an undominated vertex with the
// fewest potential dominators.  Isolated vertices are forced picks.
OracleResult<std::uint64_t> oracle_domination(const DenseGraph& g, const OracleBudget& budget);

// Backtracking search for a proper Delta-edge-coloring; Class2 iff none
// exists.  A failed Delta search is cross-checked by a successful
// (Delta+1)-coloring before Class2 is reported.
OracleResult<EdgeColorClass> oracle_chromatic_index_class(const DenseGraph& g,
                                                          const OracleBudget& budget);

// Connectivity of G \ A plus the all-even degree check; an empty or
// single-vertex G \ A counts as Eulerian (vacuous closed trail).
bool oracle_eulerian_nonisolated(const DenseGraph& g);

struct ComponentsDiameter {
  std::size_t components = 0;
  std::optional<std::uint64_t> diameter;  // nullopt when disconnected
};

// Component count and exact diameter by all-pairs BFS.  A graph with zero or
// one vertex counts as connected with diameter 0.
ComponentsDiameter oracle_components_and_diameter(const DenseGraph& g);

bool oracle_is_forest(const DenseGraph& g);    // DFS cycle detection
bool oracle_is_complete(const DenseGraph& g);  // needs >= 1 vertex
bool oracle_is_tree(const DenseGraph& g);      // connected forest, >= 1 vertex
bool oracle_is_star(const DenseGraph& g);      // K_1, K_2 or a center + leaves
bool oracle_has_universal_vertex(const DenseGraph& g);
bool oracle_no_isolated(const DenseGraph& g);

// Exactly two components of sizes {a, b}, each a complete graph.
bool oracle_matches_two_cliques(const DenseGraph& g, std::size_t a, std::size_t b);

// Non-isolated part is K_a and there are exactly k isolated vertices.
bool oracle_matches_clique_plus_isolated(const DenseGraph& g, std::size_t a, std::size_t k);

}  // namespace idealgraph
