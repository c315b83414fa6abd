#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "idealgraph/graph.hpp"

using namespace idealgraph;

namespace {

// Edge set keyed by divisor values, independent of vertex indices.
std::set<std::pair<std::uint64_t, std::uint64_t>> value_edges(const IdealGraph& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& [u, v] : g.adj.edges()) {
    const std::uint64_t a = g.vertex_values[u];
    const std::uint64_t b = g.vertex_values[v];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::set<std::uint64_t> isolated_values(const IdealGraph& g) {
  std::set<std::uint64_t> out;
  const auto flags = isolated_set(g);
  for (std::size_t u = 0; u < flags.size(); ++u) {
    if (flags[u]) out.insert(g.vertex_values[u]);
  }
  return out;
}

IdealGraph build(std::uint64_t m, std::uint64_t n) {
  return build_graph(make_module_pair(m, n));
}

using EdgeSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("the four m=12 graphs") {
  const auto g12 = build(12, 12);
  CHECK(g12.vertex_values == std::vector<std::uint64_t>{3, 2, 6, 4});
  CHECK(value_edges(g12) == EdgeSet{{2, 3}, {2, 4}, {2, 6}, {3, 6}});

  const auto g2 = build(12, 2);
  CHECK(g2.vertex_count() == 4);
  CHECK(value_edges(g2).empty());

  const auto g3 = build(12, 3);
  CHECK(value_edges(g3) == EdgeSet{{2, 4}});

  const auto g4 = build(12, 4);
  CHECK(value_edges(g4) == EdgeSet{{2, 3}, {2, 6}, {3, 6}});
}

TEST_CASE("adjacency criterion") {
  const auto p12 = make_module_pair(12, 12);
  CHECK(adjacent(p12, DivisorVector{{1, 0}}, DivisorVector{{0, 1}}));  // 2 -- 3
  CHECK_FALSE(adjacent(p12, DivisorVector{{1, 0}}, DivisorVector{{1, 0}}));

  const auto p3 = make_module_pair(12, 3);
  CHECK(adjacent(p3, DivisorVector{{1, 0}}, DivisorVector{{2, 0}}));        // 2 -- 4
  CHECK_FALSE(adjacent(p3, DivisorVector{{1, 0}}, DivisorVector{{0, 1}}));  // 2, 3
}

TEST_CASE("isolated sets") {
  CHECK(isolated_values(build(12, 3)) == std::set<std::uint64_t>{3, 6});
  // the exceptional family: G = K_2 plus two isolated vertices
  CHECK(isolated_values(build(12, 6)) == std::set<std::uint64_t>{3, 6});
  CHECK(isolated_values(build(12, 12)).empty());
}

TEST_CASE("induced subgraph on non-isolated vertices") {
  const auto g4 = build(12, 4);
  const auto sub4 = induced_nonisolated(g4);
  REQUIRE(sub4.graph.size() == 3);
  CHECK(sub4.graph.edge_count() == 3);  // triangle on {2, 3, 6}
  std::set<std::uint64_t> kept;
  for (std::size_t orig : sub4.original) kept.insert(g4.vertex_values[orig]);
  CHECK(kept == std::set<std::uint64_t>{2, 3, 6});

  const auto g6 = build(12, 6);
  const auto sub6 = induced_nonisolated(g6);
  CHECK(sub6.graph.size() == 2);
  CHECK(sub6.graph.edge_count() == 1);  // K_2 on {2, 4}

  const auto empty = build(2, 2);
  CHECK(empty.vertex_count() == 0);
  CHECK(induced_nonisolated(empty).graph.size() == 0);
}

TEST_CASE("vertex cap refusal") {
  CHECK_THROWS_AS(build_graph(make_module_pair(12, 12), 3), GraphSizeError);
  CHECK_NOTHROW(build_graph(make_module_pair(12, 12), 4));
}

TEST_CASE("dot export") {
  const std::string expected =
      "graph \"G_12(Z_12)\" {\n"
      "  \"3Z_12\";\n"
      "  \"2Z_12\";\n"
      "  \"6Z_12\";\n"
      "  \"4Z_12\";\n"
      "  \"3Z_12\" -- \"2Z_12\";\n"
      "  \"3Z_12\" -- \"6Z_12\";\n"
      "  \"2Z_12\" -- \"6Z_12\";\n"
      "  \"2Z_12\" -- \"4Z_12\";\n"
      "}\n";
  CHECK(to_dot(build(12, 12)) == expected);
}

TEST_CASE("json export") {
  const std::string expected =
      R"({"m":12,"n":3,"vertices":[{"d":3,"exponents":[0,1]},{"d":2,"exponents":[1,0]},)"
      R"({"d":6,"exponents":[1,1]},{"d":4,"exponents":[2,0]}],)"
      R"("edges":[[1,3]],"isolated":[0,2]})";
  CHECK(to_json(build(12, 3)) == expected);
}

TEST_CASE("structural invariants over the sweep range") {
  for (std::uint64_t m = 2; m <= 2000; ++m) {
    const auto base = make_module_pair(m, m);
    const auto divisors = enumerate_divisors(base);
    std::uint64_t expected_vertices = 1;
    for (std::uint32_t a : base.alpha()) expected_vertices *= a + 1;
    expected_vertices -= 2;

    const auto full = build_graph(base);  // G_m(Z_m)

    std::vector<std::pair<std::uint64_t, EdgeSet>> built;
    for (const auto& nd : divisors) {
      const std::uint64_t n = divisor_value(base, nd);
      if (n <= 1) continue;
      const auto g = build(m, n);
      REQUIRE(g.vertex_count() == expected_vertices);

      // symmetric, irreflexive
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        CHECK_FALSE(g.adj.adjacent(u, u));
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
          CHECK(g.adj.adjacent(u, v) == g.adj.adjacent(v, u));
        }
      }

      // every vertex divisible by n is isolated
      for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        if (g.vertex_values[u] % n == 0) CHECK(g.adj.degree(u) == 0);
      }

      const auto edges = value_edges(g);
      // subgraph of G_m(Z_m)
      const auto full_edges = value_edges(full);
      CHECK(std::includes(full_edges.begin(), full_edges.end(), edges.begin(), edges.end()));
      built.emplace_back(n, edges);
    }

    // monotone in the module: n1 | n2 implies E(G_n1) within E(G_n2)
    for (const auto& [n1, e1] : built) {
      for (const auto& [n2, e2] : built) {
        if (n1 != n2 && n2 % n1 == 0) {
          CHECK(std::includes(e2.begin(), e2.end(), e1.begin(), e1.end()));
        }
      }
    }
  }
}

TEST_SUITE_END();
