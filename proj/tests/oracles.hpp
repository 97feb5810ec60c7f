#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library beyond the Graph accessors.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <set>
#include <vector>

#include "cycram/graph.hpp"
#include "cycram/rng.hpp"

namespace oracle {

using cycram::Graph;
using cycram::Vertex;

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) m[v] |= std::uint64_t{1} << w;
  }
  return m;
}

inline std::uint64_t side_mask(const Graph& g, int side) {
  std::uint64_t m = 0;
  for (Vertex v : g.part_members(side)) m |= std::uint64_t{1} << v;
  return m;
}

inline std::uint64_t nbr_of(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
  std::uint64_t n = 0;
  while (set) {
    n |= adj[std::countr_zero(set)];
    set &= set - 1;
  }
  return n;
}

/// Calls fn(mask) for every nonempty subset of `pool`.
template <class Fn>
void each_subset(std::uint64_t pool, Fn&& fn) {
  for (std::uint64_t s = pool; s; s = (s - 1) & pool) fn(s);
}

/// Definition of alpha-joined over every pair of sizes >= ceil(alpha N):
/// a pair with no edges exists iff some A of size >= k misses >= k vertices of V1.
inline bool joined_full(const Graph& g, double alpha) {
  const int big_n = static_cast<int>(g.part_members(0).size());
  int k = static_cast<int>(std::ceil(alpha * big_n - 1e-9));
  if (k < 1) k = 1;
  const auto adj = adjacency_masks(g);
  const std::uint64_t v0 = side_mask(g, 0);
  const std::uint64_t v1 = side_mask(g, 1);
  bool joined = true;
  each_subset(v0, [&](std::uint64_t a) {
    if (!joined || std::popcount(a) < k) return;
    if (std::popcount(v1 & ~nbr_of(adj, a)) >= k) joined = false;
  });
  return joined;
}

struct ExpansionOracle {
  bool c1 = true, c2 = true, c3 = true;
};

/// The three expander conclusions checked on every subset of both parts.
inline ExpansionOracle expansion_full(const Graph& g, double alpha, int big_n) {
  ExpansionOracle out;
  const double rho = (1 - 2 * alpha) / (2 * alpha);
  const auto adj = adjacency_masks(g);
  for (int side = 0; side < 2; ++side) {
    const std::uint64_t pool = side_mask(g, side);
    if (std::popcount(pool) < (1 - alpha) * big_n - 1e-9) out.c1 = false;
    each_subset(pool, [&](std::uint64_t u) {
      const int s = std::popcount(u);
      const int nb = std::popcount(nbr_of(adj, u));
      if (s <= alpha * big_n + 1e-9) {
        if (!(nb > rho * s + 1e-9)) out.c2 = false;
      } else if (!(nb > (1 - 2 * alpha) * big_n + 1e-9)) {
        out.c3 = false;
      }
    });
  }
  return out;
}

/// Every simple cycle length present, by enumerating paths from each start
/// vertex through larger vertices only.
inline std::set<int> cycle_lengths(const Graph& g) {
  std::set<int> lengths;
  const int nv = g.vertex_count();
  std::vector<char> used(nv, 0);
  std::vector<Vertex> stack;
  auto dfs = [&](auto&& self, Vertex start, Vertex v, int depth) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && depth >= 3) lengths.insert(depth);
      if (w <= start || used[w]) continue;
      used[w] = 1;
      self(self, start, w, depth + 1);
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < nv; ++s) {
    used[s] = 1;
    dfs(dfs, s, s, 1);
    used[s] = 0;
  }
  return lengths;
}

/// Whether g contains a cycle of length exactly n (plain DFS, no pruning).
inline bool has_cycle(const Graph& g, int n) {
  const int nv = g.vertex_count();
  std::vector<char> used(nv, 0);
  auto dfs = [&](auto&& self, Vertex start, Vertex v, int depth) -> bool {
    if (depth == n) return g.has_edge(v, start);
    for (Vertex w : g.neighbors(v)) {
      if (w <= start || used[w]) continue;
      used[w] = 1;
      if (self(self, start, w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  for (Vertex s = 0; s < nv; ++s) {
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    if (dfs(dfs, s, s, 1)) return true;
  }
  return false;
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Exact P(|X - n p| > t) for X ~ Bin(n, p), via log-gamma in long double.
inline long double binomial_tail(int n, long double p, long double t) {
  const long double mu = n * p;
  long double total = 0;
  for (int k = 0; k <= n; ++k) {
    if (std::fabs(k - mu) <= t) continue;
    const long double lc = std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
    total += std::exp(lc + k * std::log(p) + (n - k) * std::log1p(-p));
  }
  return total;
}

/// Largest C_n-free spanning subgraph by scanning all edge subsets.
inline long max_cnfree_scan(const Graph& g, int n) {
  const auto edges = g.edges();
  const int e = static_cast<int>(edges.size());
  long best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    const int c = std::popcount(mask);
    if (c <= best) continue;
    std::vector<cycram::Edge> keep;
    for (int i = 0; i < e; ++i) {
      if (mask >> i & 1) keep.push_back(edges[i]);
    }
    if (!has_cycle(Graph::from_edges(g.vertex_count(), keep), n)) best = c;
  }
  return best;
}

/// Seeded G(n, p) built with the test's own draw order.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  cycram::CounterRng rng(seed);
  std::vector<cycram::Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

/// Seeded labeled bipartite graph with parts 0..n0-1 and n0..n0+n1-1.
inline Graph random_bipartite(int n0, int n1, double p, std::uint64_t seed) {
  cycram::CounterRng rng(seed);
  std::vector<cycram::Edge> edges;
  for (Vertex u = 0; u < n0; ++u) {
    for (Vertex v = 0; v < n1; ++v) {
      if (rng.next_unit() < p) edges.push_back({u, n0 + v});
    }
  }
  return Graph::bipartite(n0, n1, edges);
}

}  // namespace oracle
