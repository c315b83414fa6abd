#include "idealgraph/graph.hpp"

#include <bit>
#include <sstream>
#include <string>

#include <json.hpp>

namespace idealgraph {

std::size_t DenseGraph::degree(std::size_t u) const {
  std::size_t deg = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    deg += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
  }
  return deg;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> DenseGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> DenseGraph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = bits_[u * words_ + w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
  return out;
}

bool adjacent(const ModulePair& pair, const DivisorVector& d1, const DivisorVector& d2) {
  if (d1 == d2) return false;
  return !n_divides(pair, lcm_vector(d1, d2));
}

IdealGraph build_graph(const ModulePair& pair, std::size_t vertex_cap) {
  std::size_t divisor_count = 1;
  for (std::uint32_t a : pair.alpha()) divisor_count *= a + 1;
  const std::size_t count = divisor_count - 2;
  if (count > vertex_cap) {
    throw GraphSizeError("build_graph: " + std::to_string(count) +
                         " vertices exceed the cap of " + std::to_string(vertex_cap));
  }

  IdealGraph g;
  g.pair = pair;
  auto all = enumerate_divisors(pair);
  // Lexicographic order puts 1 first and m last; drop both.
  g.vertices.assign(all.begin() + 1, all.end() - 1);
  g.vertex_values.reserve(count);
  for (const auto& d : g.vertices) g.vertex_values.push_back(divisor_value(pair, d));

  g.adj = DenseGraph(count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (adjacent(pair, g.vertices[u], g.vertices[v])) g.adj.add_edge(u, v);
    }
  }
  return g;
}

std::vector<bool> isolated_set(const IdealGraph& graph) {
  std::vector<bool> out(graph.vertex_count());
  for (std::size_t u = 0; u < out.size(); ++u) out[u] = graph.adj.degree(u) == 0;
  return out;
}

InducedSubgraph induced_nonisolated(const IdealGraph& graph) {
  InducedSubgraph sub;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    if (graph.adj.degree(u) > 0) sub.original.push_back(u);
  }
  sub.graph = DenseGraph(sub.original.size());
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.original.size(); ++j) {
      if (graph.adj.adjacent(sub.original[i], sub.original[j])) sub.graph.add_edge(i, j);
    }
  }
  return sub;
}

namespace {

std::string vertex_label(const IdealGraph& graph, std::size_t u) {
  return std::to_string(graph.vertex_values[u]) + "Z_" + std::to_string(graph.pair.m_value);
}

}  // namespace

std::string to_dot(const IdealGraph& graph) {
  std::ostringstream out;
  out << "graph \"G_" << graph.pair.n_value << "(Z_" << graph.pair.m_value << ")\" {\n";
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    out << "  \"" << vertex_label(graph, u) << "\";\n";
  }
  for (const auto& [u, v] : graph.adj.edges()) {
    out << "  \"" << vertex_label(graph, u) << "\" -- \"" << vertex_label(graph, v)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const IdealGraph& graph) {
  nlohmann::ordered_json j;
  j["m"] = graph.pair.m_value;
  j["n"] = graph.pair.n_value;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    nlohmann::ordered_json v;
    v["d"] = graph.vertex_values[u];
    v["exponents"] = graph.vertices[u].r;
    j["vertices"].push_back(std::move(v));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : graph.adj.edges()) {
    j["edges"].push_back({u, v});
  }
  j["isolated"] = nlohmann::ordered_json::array();
  const auto isolated = isolated_set(graph);
  for (std::size_t u = 0; u < isolated.size(); ++u) {
    if (isolated[u]) j["isolated"].push_back(u);
  }
  return j.dump();
}

}  // namespace idealgraph
