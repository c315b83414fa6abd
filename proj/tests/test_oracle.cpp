#include <doctest.h>

#include <map>

#include "idealgraph/graph.hpp"
#include "idealgraph/oracle.hpp"

using namespace idealgraph;

namespace {

IdealGraph build(std::uint64_t m, std::uint64_t n) {
  return build_graph(make_module_pair(m, n));
}

std::map<std::uint64_t, std::size_t> degrees_by_value(const IdealGraph& g) {
  std::map<std::uint64_t, std::size_t> out;
  const auto degs = oracle_degrees(g.adj);
  for (std::size_t u = 0; u < degs.size(); ++u) out[g.vertex_values[u]] = degs[u];
  return out;
}

// Test-only second route: maximum clique of the complement by plain
// recursion, no bounds shared with the production solver.
std::size_t brute_max_clique_complement(const DenseGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      for (std::size_t u : chosen) {
        if (g.adjacent(u, v)) {  // complement clique = independent set in g
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(v);
        self(self, v + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

DenseGraph complete_graph(std::size_t n) {
  DenseGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("degrees") {
  const auto by_value = degrees_by_value(build(12, 12));
  CHECK(by_value.at(2) == 3);
  CHECK(by_value.at(3) == 2);
  CHECK(by_value.at(4) == 1);
  CHECK(by_value.at(6) == 2);

  for (const auto& [value, deg] : degrees_by_value(build(12, 2))) CHECK(deg == 0);

  const auto g4 = degrees_by_value(build(12, 4));
  CHECK(g4.at(2) == 2);
  CHECK(g4.at(3) == 2);
  CHECK(g4.at(4) == 0);
  CHECK(g4.at(6) == 2);
}

TEST_CASE("girth") {
  CHECK(oracle_girth(build(12, 4).adj) == 3);
  CHECK(oracle_girth(build(12, 2).adj) == std::nullopt);
  CHECK(oracle_girth(build(12, 12).adj) == 3);
  CHECK(oracle_girth(build(16, 8).adj) == std::nullopt);  // K_2 plus an isolated vertex

  // a 4-cycle built by hand, girth 4 reported exactly
  DenseGraph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(oracle_girth(c4) == 4);
}

TEST_CASE("independence") {
  const OracleBudget budget;
  auto r = oracle_independence(build(12, 4).adj, budget);
  REQUIRE(r.status == OracleStatus::Exact);
  CHECK(*r.value == 2);

  r = oracle_independence(build(12, 2).adj, budget);
  CHECK(*r.value == 4);

  r = oracle_independence(build(30, 30).adj, budget);
  CHECK(*r.value == 3);
}

TEST_CASE("domination") {
  const OracleBudget budget;
  auto r = oracle_domination(build(12, 4).adj, budget);
  REQUIRE(r.status == OracleStatus::Exact);
  CHECK(*r.value == 2);

  r = oracle_domination(build(12, 2).adj, budget);
  CHECK(*r.value == 4);

  r = oracle_domination(build(12, 12).adj, budget);
  CHECK(*r.value == 1);

  r = oracle_domination(build(36, 6).adj, budget);
  CHECK(*r.value == 5);
}

TEST_CASE("chromatic index class") {
  const OracleBudget budget;
  auto r = oracle_chromatic_index_class(build(12, 4).adj, budget);  // triangle
  REQUIRE(r.status == OracleStatus::Exact);
  CHECK(*r.value == EdgeColorClass::Class2);

  DenseGraph k2(2);
  k2.add_edge(0, 1);
  r = oracle_chromatic_index_class(k2, budget);
  CHECK(*r.value == EdgeColorClass::Class1);

  r = oracle_chromatic_index_class(build(30, 30).adj, budget);  // chi' = Delta = 4
  CHECK(*r.value == EdgeColorClass::Class1);

  // odd cliques are class 2, even cliques class 1
  r = oracle_chromatic_index_class(complete_graph(9), budget);
  CHECK(*r.value == EdgeColorClass::Class2);
  r = oracle_chromatic_index_class(complete_graph(8), budget);
  CHECK(*r.value == EdgeColorClass::Class1);
}

TEST_CASE("eulerian on the non-isolated part") {
  CHECK(oracle_eulerian_nonisolated(build(12, 4).adj));       // K_3
  CHECK_FALSE(oracle_eulerian_nonisolated(build(12, 12).adj));
  CHECK_FALSE(oracle_eulerian_nonisolated(build(36, 6).adj));  // K_2 + K_2 disconnected
  CHECK(oracle_eulerian_nonisolated(build(12, 2).adj));        // empty, vacuous
}

TEST_CASE("components and diameter") {
  auto cd = oracle_components_and_diameter(induced_nonisolated(build(12, 4)).graph);
  CHECK(cd.components == 1);
  CHECK(cd.diameter == 1);

  cd = oracle_components_and_diameter(induced_nonisolated(build(36, 6)).graph);
  CHECK(cd.components == 2);
  CHECK(cd.diameter == std::nullopt);

  cd = oracle_components_and_diameter(build(12, 12).adj);
  CHECK(cd.components == 1);
  CHECK(cd.diameter == 2);
}

TEST_CASE("structure checks") {
  CHECK(oracle_matches_clique_plus_isolated(build(12, 6).adj, 2, 2));
  CHECK_FALSE(oracle_matches_clique_plus_isolated(build(12, 4).adj, 2, 2));
  CHECK(oracle_is_complete(build(8, 8).adj));  // K_2
  CHECK_FALSE(oracle_is_forest(build(12, 4).adj));
  CHECK(oracle_is_forest(build(12, 3).adj));
  CHECK(oracle_matches_two_cliques(induced_nonisolated(build(36, 6)).graph, 2, 2));
  CHECK_FALSE(oracle_matches_two_cliques(induced_nonisolated(build(12, 4)).graph, 2, 1));

  CHECK(oracle_is_tree(build(4, 2).adj));   // K_1
  CHECK(oracle_is_star(build(27, 27).adj)); // K_2
  CHECK_FALSE(oracle_is_tree(build(8, 2).adj));
  CHECK(oracle_has_universal_vertex(build(12, 12).adj));
  CHECK_FALSE(oracle_has_universal_vertex(build(12, 4).adj));
  CHECK(oracle_no_isolated(build(12, 12).adj));
  CHECK_FALSE(oracle_no_isolated(build(12, 4).adj));
}

TEST_CASE("independence agrees with max clique of the complement") {
  const OracleBudget budget;
  for (std::uint64_t m = 2; m <= 120; ++m) {
    for (std::uint64_t n = 2; n <= m; ++n) {
      if (m % n != 0) continue;
      const auto g = build(m, n);
      if (g.vertex_count() > 16) continue;
      const auto r = oracle_independence(g.adj, budget);
      REQUIRE(r.status == OracleStatus::Exact);
      CHECK(*r.value == brute_max_clique_complement(g.adj));
    }
  }
}

TEST_CASE("budgets: skipped, timeout, determinism") {
  OracleBudget tiny;
  tiny.max_vertices_exact_independence = 3;
  tiny.max_vertices_exact_domination = 3;
  tiny.max_edges_edge_coloring = 2;
  const auto g = build(12, 12);
  CHECK(oracle_independence(g.adj, tiny).status == OracleStatus::Skipped);
  CHECK(oracle_domination(g.adj, tiny).status == OracleStatus::Skipped);
  CHECK(oracle_chromatic_index_class(g.adj, tiny).status == OracleStatus::Skipped);

  OracleBudget starved;
  starved.deterministic = true;
  starved.max_nodes_per_invariant = 1;
  CHECK(oracle_independence(g.adj, starved).status == OracleStatus::Timeout);
  // G(Z_12) is closed by bounds alone, so give domination a wider instance
  CHECK(oracle_domination(build(36, 6).adj, starved).status == OracleStatus::Timeout);
  CHECK(oracle_chromatic_index_class(g.adj, starved).status == OracleStatus::Timeout);

  OracleBudget det;
  det.deterministic = true;
  const auto g30 = build(30, 30);
  const auto a1 = oracle_independence(g30.adj, det);
  const auto a2 = oracle_independence(g30.adj, det);
  CHECK(a1.status == a2.status);
  CHECK(a1.value == a2.value);
  CHECK(a1.nodes_expanded == a2.nodes_expanded);
  const auto c1 = oracle_chromatic_index_class(g30.adj, det);
  const auto c2 = oracle_chromatic_index_class(g30.adj, det);
  CHECK(c1.value == c2.value);
  CHECK(c1.nodes_expanded == c2.nodes_expanded);
}

TEST_SUITE_END();
