#include "idealgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace idealgraph {

namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

std::uint64_t low_bits(unsigned k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Node-expansion budget with an optional wall-clock guard.  In deterministic
// mode only the node count matters, so identical inputs abort identically.
struct SearchGuard {
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  bool use_clock;
  std::chrono::steady_clock::time_point deadline;
  bool exhausted = false;

  explicit SearchGuard(const OracleBudget& budget)
      : max_nodes(budget.max_nodes_per_invariant),
        use_clock(!budget.deterministic),
        deadline(std::chrono::steady_clock::now() + budget.timeout_per_invariant) {}

  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > max_nodes) {
      exhausted = true;
      return false;
    }
    if (use_clock && (nodes & 0x3FF) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

std::vector<std::size_t> component_labels(const DenseGraph& g) {
  std::vector<std::size_t> label(g.size(), kNpos);
  std::size_t next = 0;
  for (std::size_t s0 = 0; s0 < g.size(); ++s0) {
    if (label[s0] != kNpos) continue;
    label[s0] = next;
    std::queue<std::size_t> queue;
    queue.push(s0);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : g.neighbors(u)) {
        if (label[w] == kNpos) {
          label[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

// Maximum independent set over <= 64 vertices, branch and bound with a
// greedy clique-cover upper bound.
struct MisSearch {
  const std::vector<std::uint64_t>& adj;
  SearchGuard& guard;
  std::uint64_t best = 0;

  unsigned clique_cover_bound(std::uint64_t cand) const {
    unsigned bound = 0;
    std::uint64_t rest = cand;
    while (rest) {
      ++bound;
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t common = adj[static_cast<std::size_t>(u)] & rest;
      while (common) {
        const int w = std::countr_zero(common);
        rest &= ~(std::uint64_t{1} << w);
        common &= adj[static_cast<std::size_t>(w)];
      }
    }
    return bound;
  }

  void expand(std::uint64_t cand, unsigned size) {
    if (!guard.tick()) return;
    if (size > best) best = size;
    if (cand == 0) return;
    const unsigned remaining = static_cast<unsigned>(std::popcount(cand));
    if (size + remaining <= best) return;
    if (size + clique_cover_bound(cand) <= best) return;

    // Branch on the candidate with the most candidate neighbors.
    std::size_t pick = kNpos;
    int pick_deg = -1;
    std::uint64_t scan = cand;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = static_cast<std::size_t>(v);
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    expand(cand & ~(adj[pick] | bit), size + 1);
    if (guard.exhausted) return;
    expand(cand & ~bit, size);
  }
};

// Minimum dominating set over <= 64 vertices: branch over the possible
// dominators of an undominated vertex with the fewest of them.
struct MdsSearch {
  const std::vector<std::uint64_t>& closed;  // N[v] masks
  std::uint64_t all;
  SearchGuard& guard;
  std::uint64_t best;

  void dfs(std::uint64_t dominated, unsigned chosen) {
    if (!guard.tick()) return;
    if (dominated == all) {
      best = std::min<std::uint64_t>(best, chosen);
      return;
    }
    const std::uint64_t und = all & ~dominated;
    const unsigned und_count = static_cast<unsigned>(std::popcount(und));
    unsigned max_cover = 0;
    for (const std::uint64_t mask : closed) {
      max_cover = std::max<unsigned>(
          max_cover, static_cast<unsigned>(std::popcount(mask & und)));
    }
    const unsigned lower = (und_count + max_cover - 1) / max_cover;
    if (chosen + lower >= best) return;

    // The undominated vertex with the fewest potential dominators.
    std::size_t pick = kNpos;
    unsigned pick_options = std::numeric_limits<unsigned>::max();
    std::uint64_t scan = und;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const unsigned options =
          static_cast<unsigned>(std::popcount(closed[static_cast<std::size_t>(v)]));
      if (options < pick_options) {
        pick_options = options;
        pick = static_cast<std::size_t>(v);
      }
    }

    std::vector<std::size_t> dominators;
    std::uint64_t cands = closed[pick];
    while (cands) {
      const int w = std::countr_zero(cands);
      cands &= cands - 1;
      dominators.push_back(static_cast<std::size_t>(w));
    }
    std::stable_sort(dominators.begin(), dominators.end(),
                     [&](std::size_t a, std::size_t b) {
                       return std::popcount(closed[a] & und) > std::popcount(closed[b] & und);
                     });
    for (std::size_t w : dominators) {
      dfs(dominated | closed[w], chosen + 1);
      if (guard.exhausted) return;
    }
  }
};

}  // namespace

const char* oracle_status_name(OracleStatus status) {
  switch (status) {
    case OracleStatus::Exact: return "EXACT";
    case OracleStatus::Skipped: return "SKIPPED";
    case OracleStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::vector<std::size_t> oracle_degrees(const DenseGraph& g) {
  std::vector<std::size_t> out(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) out[u] = g.degree(u);
  return out;
}

std::optional<std::uint64_t> oracle_girth(const DenseGraph& g) {
  const std::size_t n = g.size();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s0] = 0;
    parent[s0] = kNpos;
    std::queue<std::size_t> queue;
    queue.push(s0);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          // Closed walk through the root; never shorter than the girth.
          best = std::min<std::uint64_t>(
              best, static_cast<std::uint64_t>(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

OracleResult<std::uint64_t> oracle_independence(const DenseGraph& g,
                                                const OracleBudget& budget) {
  if (g.size() > budget.max_vertices_exact_independence) {
    return OracleResult<std::uint64_t>::skipped();
  }
  std::vector<std::size_t> active;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) > 0) active.push_back(u);
  }
  const std::uint64_t isolated = g.size() - active.size();
  if (active.size() > 64) return OracleResult<std::uint64_t>::skipped();

  std::vector<std::uint64_t> adj(active.size(), 0);
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = 0; j < active.size(); ++j) {
      if (i != j && g.adjacent(active[i], active[j])) adj[i] |= std::uint64_t{1} << j;
    }
  }

  SearchGuard guard(budget);
  MisSearch search{adj, guard};

  // Greedy seed: repeatedly take a minimum-degree candidate.
  {
    std::uint64_t cand = low_bits(static_cast<unsigned>(active.size()));
    std::uint64_t size = 0;
    while (cand) {
      std::size_t pick = kNpos;
      int pick_deg = std::numeric_limits<int>::max();
      std::uint64_t scan = cand;
      while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
        if (deg < pick_deg) {
          pick_deg = deg;
          pick = static_cast<std::size_t>(v);
        }
      }
      cand &= ~(adj[pick] | (std::uint64_t{1} << pick));
      ++size;
    }
    search.best = size > 0 ? size - 1 : 0;  // strict bound; B&B must re-prove
  }

  search.expand(low_bits(static_cast<unsigned>(active.size())), 0);
  if (guard.exhausted) return OracleResult<std::uint64_t>::timeout(guard.nodes);
  return OracleResult<std::uint64_t>::exact(isolated + search.best, guard.nodes);
}

OracleResult<std::uint64_t> oracle_domination(const DenseGraph& g,
                                              const OracleBudget& budget) {
  if (g.size() == 0) return OracleResult<std::uint64_t>::exact(0);
  if (g.size() > budget.max_vertices_exact_domination || g.size() > 64) {
    return OracleResult<std::uint64_t>::skipped();
  }
  const std::size_t n = g.size();
  std::vector<std::uint64_t> closed(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    closed[u] = std::uint64_t{1} << u;
    for (std::size_t w : g.neighbors(u)) closed[u] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = low_bits(static_cast<unsigned>(n));

  SearchGuard guard(budget);
  // Greedy upper bound: max-coverage picks.
  std::uint64_t greedy = 0;
  {
    std::uint64_t und = all;
    while (und) {
      std::size_t pick = kNpos;
      int cover = -1;
      for (std::size_t v = 0; v < n; ++v) {
        const int c = std::popcount(closed[v] & und);
        if (c > cover) {
          cover = c;
          pick = v;
        }
      }
      und &= ~closed[pick];
      ++greedy;
    }
  }

  MdsSearch search{closed, all, guard, greedy};
  search.dfs(0, 0);
  if (guard.exhausted) return OracleResult<std::uint64_t>::timeout(guard.nodes);
  return OracleResult<std::uint64_t>::exact(search.best, guard.nodes);
}

namespace {

// Proper k-edge-coloring search; 1 = found, 0 = impossible, -1 = aborted.
struct EdgeColoringSearch {
  const std::vector<std::pair<std::size_t, std::size_t>>& edges;
  std::vector<std::uint64_t>& used;
  unsigned colors;
  SearchGuard& guard;

  int assign(std::size_t i, unsigned introduced) {
    if (i == edges.size()) return 1;
    if (!guard.tick()) return -1;
    const auto [u, v] = edges[i];
    // First-fit over already-introduced colors plus one fresh color; color
    // classes are interchangeable, so this loses no solutions.
    const unsigned reach = std::min(colors, introduced + 1);
    std::uint64_t avail = ~(used[u] | used[v]) & low_bits(reach);
    while (avail) {
      const unsigned c = static_cast<unsigned>(std::countr_zero(avail));
      avail &= avail - 1;
      const std::uint64_t bit = std::uint64_t{1} << c;
      used[u] |= bit;
      used[v] |= bit;
      const int r = assign(i + 1, std::max(introduced, c + 1));
      used[u] &= ~bit;
      used[v] &= ~bit;
      if (r != 0) return r;
    }
    return 0;
  }
};

// Every color class is a matching, so a component with V vertices carries at
// most k * floor(V/2) edges under a k-coloring.
bool coloring_capacity_ok(const DenseGraph& g, unsigned k) {
  const auto label = component_labels(g);
  std::size_t comps = 0;
  for (std::size_t u = 0; u < g.size(); ++u) comps = std::max(comps, label[u] + 1);
  std::vector<std::size_t> verts(comps, 0), twice_edges(comps, 0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) == 0) continue;
    verts[label[u]] += 1;
    twice_edges[label[u]] += g.degree(u);
  }
  for (std::size_t c = 0; c < comps; ++c) {
    if (twice_edges[c] / 2 > static_cast<std::size_t>(k) * (verts[c] / 2)) return false;
  }
  return true;
}

}  // namespace

OracleResult<EdgeColorClass> oracle_chromatic_index_class(const DenseGraph& g,
                                                          const OracleBudget& budget) {
  auto edges = g.edges();
  if (edges.empty()) return OracleResult<EdgeColorClass>::exact(EdgeColorClass::Class1);
  if (edges.size() > budget.max_edges_edge_coloring) {
    return OracleResult<EdgeColorClass>::skipped();
  }

  const auto degrees = oracle_degrees(g);
  const unsigned delta =
      static_cast<unsigned>(*std::max_element(degrees.begin(), degrees.end()));
  if (delta + 1 > 63) return OracleResult<EdgeColorClass>::skipped();

  std::stable_sort(edges.begin(), edges.end(),
                   [&](const auto& a, const auto& b) {
                     return degrees[a.first] + degrees[a.second] >
                            degrees[b.first] + degrees[b.second];
                   });

  SearchGuard guard(budget);
  auto try_colors = [&](unsigned k) -> int {
    if (!coloring_capacity_ok(g, k)) return 0;
    std::vector<std::uint64_t> used(g.size(), 0);
    EdgeColoringSearch search{edges, used, k, guard};
    return search.assign(0, 0);
  };

  const int with_delta = try_colors(delta);
  if (with_delta < 0) return OracleResult<EdgeColorClass>::timeout(guard.nodes);
  if (with_delta == 1) {
    return OracleResult<EdgeColorClass>::exact(EdgeColorClass::Class1, guard.nodes);
  }
  // Cross-check: a (Delta+1)-coloring must exist for any simple graph.
  const int fallback = try_colors(delta + 1);
  if (fallback < 0) return OracleResult<EdgeColorClass>::timeout(guard.nodes);
  if (fallback != 1) {
    throw std::logic_error("edge coloring: failed to color with Delta+1 colors");
  }
  return OracleResult<EdgeColorClass>::exact(EdgeColorClass::Class2, guard.nodes);
}

bool oracle_eulerian_nonisolated(const DenseGraph& g) {
  std::vector<std::size_t> active;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) > 0) active.push_back(u);
  }
  if (active.size() <= 1) return true;
  for (std::size_t u : active) {
    if (g.degree(u) % 2 != 0) return false;
  }
  // Connectivity of the non-isolated part (neighbors of an active vertex are
  // themselves active).
  std::vector<bool> seen(g.size(), false);
  std::queue<std::size_t> queue;
  queue.push(active[0]);
  seen[active[0]] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == active.size();
}

ComponentsDiameter oracle_components_and_diameter(const DenseGraph& g) {
  ComponentsDiameter out;
  const std::size_t n = g.size();
  if (n == 0) {
    out.components = 0;
    out.diameter = 0;
    return out;
  }
  const auto label = component_labels(g);
  out.components = *std::max_element(label.begin(), label.end()) + 1;
  if (out.components > 1) return out;  // diameter infinite

  std::uint64_t diameter = 0;
  std::vector<std::int64_t> dist(n);
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s0] = 0;
    std::queue<std::size_t> queue;
    queue.push(s0);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          diameter = std::max(diameter, static_cast<std::uint64_t>(dist[w]));
          queue.push(w);
        }
      }
    }
  }
  out.diameter = diameter;
  return out;
}

bool oracle_is_forest(const DenseGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    if (seen[s0]) continue;
    // DFS; an edge to a visited vertex other than the parent closes a cycle.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s0, kNpos}};
    seen[s0] = true;
    while (!stack.empty()) {
      const auto [u, parent] = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, u);
        } else if (w != parent) {
          return false;
        }
      }
    }
  }
  return true;
}

bool oracle_is_complete(const DenseGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  return g.edge_count() == n * (n - 1) / 2;
}

bool oracle_is_tree(const DenseGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  if (g.edge_count() != n - 1) return false;
  return oracle_components_and_diameter(g).components == 1;
}

bool oracle_is_star(const DenseGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  if (n == 1) return true;
  if (!oracle_is_tree(g)) return false;
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) == n - 1) return true;
  }
  return false;
}

bool oracle_has_universal_vertex(const DenseGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) == g.size() - 1) return true;
  }
  return false;
}

bool oracle_no_isolated(const DenseGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) == 0) return false;
  }
  return true;
}

bool oracle_matches_two_cliques(const DenseGraph& g, std::size_t a, std::size_t b) {
  const std::size_t n = g.size();
  if (n != a + b) return false;
  const auto label = component_labels(g);
  std::size_t comps = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  if (comps != 2) return false;
  std::vector<std::size_t> verts(comps, 0), twice_edges(comps, 0);
  for (std::size_t u = 0; u < n; ++u) {
    verts[label[u]] += 1;
    twice_edges[label[u]] += g.degree(u);
  }
  std::vector<std::size_t> sizes(verts);
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::size_t> want{a, b};
  std::sort(want.begin(), want.end());
  if (sizes != want) return false;
  for (std::size_t c = 0; c < comps; ++c) {
    if (twice_edges[c] != verts[c] * (verts[c] - 1)) return false;
  }
  return true;
}

bool oracle_matches_clique_plus_isolated(const DenseGraph& g, std::size_t a, std::size_t k) {
  std::vector<std::size_t> active;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.degree(u) > 0) active.push_back(u);
  }
  if (g.size() - active.size() != k) return false;
  if (active.size() != a) return false;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      if (!g.adjacent(active[i], active[j])) return false;
    }
  }
  return true;
}

}  // namespace idealgraph
