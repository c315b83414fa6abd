#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idealgraph/arithmetic.hpp"

namespace idealgraph {

// Simple undirected graph over vertices 0..n-1 with adjacency stored as
// packed 64-bit rows, so adjacency queries and row scans are O(1)/O(n/64).
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    set_bit(u, v);
    set_bit(v, u);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Neighbors of u in increasing order.
  std::vector<std::size_t> neighbors(std::size_t u) const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  void set_bit(std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Refusal thrown when a graph would exceed the configured vertex cap.
class GraphSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexCap = 4096;

// The graph G_n(Z_m): one vertex per proper nonzero ideal d*Z_m (divisors d
// of m with d != 1, m) in the fixed lexicographic exponent order, and an edge
// between d1, d2 exactly when n does not divide lcm(d1, d2).
struct IdealGraph {
  ModulePair pair;
  std::vector<DivisorVector> vertices;
  std::vector<std::uint64_t> vertex_values;
  DenseGraph adj;

  std::size_t vertex_count() const { return vertices.size(); }
};

// Adjacency criterion for two vertices (irreflexive by definition).
bool adjacent(const ModulePair& pair, const DivisorVector& d1, const DivisorVector& d2);

// Builds G_n(Z_m).  Throws GraphSizeError when the vertex count would exceed
// vertex_cap; an empty graph (m prime) is fine.
IdealGraph build_graph(const ModulePair& pair, std::size_t vertex_cap = kDefaultVertexCap);

// Member flags of the isolated-vertex set over the graph's vertex indices.
std::vector<bool> isolated_set(const IdealGraph& graph);

// Induced subgraph on the non-isolated vertices; original[i] is the index of
// subgraph vertex i in the parent graph.
struct InducedSubgraph {
  DenseGraph graph;
  std::vector<std::size_t> original;
};

InducedSubgraph induced_nonisolated(const IdealGraph& graph);

// DOT export: one node per vertex labeled "dZ_m", isolated vertices included,
// undirected edges in deterministic order.
std::string to_dot(const IdealGraph& graph);

// JSON export with fixed field order:
// {m, n, vertices:[{d, exponents:[...]}], edges:[[i,j]...], isolated:[i...]}.
std::string to_json(const IdealGraph& graph);

}  // namespace idealgraph
