#include "cycram/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cycram/errors.hpp"
#include "cycram/rng.hpp"

namespace cycram {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return adj;
}

void add_edge(Adjacency& adj, Vertex u, Vertex v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void remove_edge(Adjacency& adj, Vertex u, Vertex v) {
  adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
  adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
}

std::vector<int> bfs_distances(const Adjacency& adj, Vertex from,
                               const std::vector<std::uint8_t>* allowed = nullptr) {
  std::vector<int> dist(adj.size(), -1);
  dist[from] = 0;
  std::vector<Vertex> queue{from};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : adj[queue[i]]) {
      if (dist[w] < 0 && (!allowed || (*allowed)[w])) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Simple u-v path of exactly `length` edges; a vertex w may be entered with
// `left` edges remaining only if dist(w, v) <= left.
bool path_search(const Adjacency& adj, Vertex u, Vertex v, int length, std::vector<Vertex>* out) {
  if (u == v || length < 1) return false;
  if (length == 1) {
    const bool ok = std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    if (ok && out) *out = {u, v};
    return ok;
  }
  const auto dist = bfs_distances(adj, v);
  if (dist[u] < 0 || dist[u] > length) return false;
  std::vector<std::uint8_t> used(adj.size(), 0);
  std::vector<Vertex> path{u};
  used[u] = 1;
  auto dfs = [&](auto&& self, Vertex x, int left) -> bool {
    if (left == 1) {
      if (std::find(adj[x].begin(), adj[x].end(), v) == adj[x].end()) return false;
      path.push_back(v);
      return true;
    }
    for (Vertex w : adj[x]) {
      if (w == v || used[w] || dist[w] < 0 || dist[w] > left - 1) continue;
      used[w] = 1;
      path.push_back(w);
      if (self(self, w, left - 1)) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (!dfs(dfs, u, length)) return false;
  if (out) *out = std::move(path);
  return true;
}

std::optional<std::vector<Vertex>> cycle_search(const Adjacency& adj, int n) {
  const int count = static_cast<int>(adj.size());
  for (Vertex s = 0; s < count; ++s) {
    if (adj[s].size() < 2) continue;
    std::vector<std::uint8_t> allowed(adj.size(), 0);
    for (Vertex v = s; v < count; ++v) allowed[v] = 1;
    const auto dist = bfs_distances(adj, s, &allowed);
    std::vector<std::uint8_t> used(adj.size(), 0);
    std::vector<Vertex> path{s};
    used[s] = 1;
    auto dfs = [&](auto&& self, Vertex x, int len) -> bool {
      if (len == n - 1) {
        return std::find(adj[x].begin(), adj[x].end(), s) != adj[x].end();
      }
      for (Vertex w : adj[x]) {
        if (w <= s || used[w] || dist[w] < 0 || dist[w] > n - len - 1) continue;
        used[w] = 1;
        path.push_back(w);
        if (self(self, w, len + 1)) return true;
        path.pop_back();
        used[w] = 0;
      }
      return false;
    };
    if (dfs(dfs, s, 0)) return path;
  }
  return std::nullopt;
}

void require_cycle_length(int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
}

}  // namespace

std::optional<std::vector<Vertex>> find_cycle_exact(const Graph& g, int n, int vertex_cap) {
  require_cycle_length(n);
  if (vertex_cap > 0 && g.vertex_count() > vertex_cap) {
    throw CapExceeded("find_cycle_exact: " + std::to_string(g.vertex_count()) +
                      " vertices exceed the cap of " + std::to_string(vertex_cap));
  }
  if (static_cast<int>(g.edge_count()) < n || n > g.vertex_count()) return std::nullopt;
  return cycle_search(adjacency_of(g), n);
}

std::optional<std::vector<Vertex>> find_path_of_length(const Graph& g, Vertex u, Vertex v,
                                                       int length) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InvalidInput("path endpoint out of range");
  }
  std::vector<Vertex> out;
  if (!path_search(adjacency_of(g), u, v, length, &out)) return std::nullopt;
  return out;
}

CnFreeResult max_cnfree_edges(const Graph& g, int n, int edge_cap) {
  require_cycle_length(n);
  const auto edges = g.edges();
  const long e = static_cast<long>(edges.size());
  CnFreeResult res;
  if (!find_cycle_exact(g, n, 0)) {
    res.lower = res.upper = e;
    res.exact = true;
    res.witness = edges;
    return res;
  }

  // Greedy C_n-free subgraph in edge order, optionally grown from a seed set.
  auto greedy_from = [&](const std::vector<Edge>& seed) {
    Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
    std::set<Edge> chosen(seed.begin(), seed.end());
    for (const auto& ed : seed) add_edge(adj, ed.u, ed.v);
    for (const auto& ed : edges) {
      if (chosen.contains(ed)) continue;
      if (!path_search(adj, ed.u, ed.v, n - 1, nullptr)) {
        add_edge(adj, ed.u, ed.v);
        chosen.insert(ed);
      }
    }
    return std::vector<Edge>(chosen.begin(), chosen.end());
  };
  std::vector<Edge> greedy = greedy_from({});
  if (n % 2 == 1) {
    // a bipartite subgraph has no odd cycle at all
    auto from_cut = greedy_from(bipartite_split(g).spanning.edges());
    if (from_cut.size() > greedy.size()) greedy = std::move(from_cut);
  }
  res.lower = static_cast<long>(greedy.size());
  res.witness = greedy;

  if (e <= edge_cap) {
    std::vector<std::uint8_t> take(edges.size(), 0);
    Adjacency cur(static_cast<std::size_t>(g.vertex_count()));
    long best = res.lower;
    std::vector<std::uint8_t> best_take;
    auto dfs = [&](auto&& self, std::size_t i, long count) -> void {
      ++res.nodes;
      if (count + (e - static_cast<long>(i)) <= best) return;
      if (static_cast<long>(i) == e) {
        best = count;
        best_take = take;
        return;
      }
      const auto& ed = edges[i];
      if (!path_search(cur, ed.u, ed.v, n - 1, nullptr)) {
        add_edge(cur, ed.u, ed.v);
        take[i] = 1;
        self(self, i + 1, count + 1);
        take[i] = 0;
        remove_edge(cur, ed.u, ed.v);
      }
      self(self, i + 1, count);
    };
    dfs(dfs, 0, 0);
    if (!best_take.empty()) {
      res.witness.clear();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (best_take[i]) res.witness.push_back(edges[i]);
      }
    }
    res.lower = res.upper = best;
    res.exact = true;
    return res;
  }

  // Hitting: delete one edge of each C_n found until none remains.
  Adjacency hit = adjacency_of(g);
  std::vector<std::uint8_t> removed(edges.size(), 0);
  long hits = 0;
  while (auto c = cycle_search(hit, n)) {
    remove_edge(hit, (*c)[0], (*c)[1]);
    removed[g.edge_index((*c)[0], (*c)[1])] = 1;
    ++hits;
  }
  if (e - hits > res.lower) {
    res.lower = e - hits;
    res.witness.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!removed[i]) res.witness.push_back(edges[i]);
    }
  }
  // Edge-disjoint copies: each must lose an edge.
  Adjacency packing = adjacency_of(g);
  long disjoint = 0;
  while (auto c = cycle_search(packing, n)) {
    for (std::size_t i = 0; i < c->size(); ++i) {
      remove_edge(packing, (*c)[i], (*c)[(i + 1) % c->size()]);
    }
    ++disjoint;
  }
  res.upper = e - disjoint;
  res.exact = res.lower == res.upper;
  return res;
}

ArrowVerdict arrow_check(const Graph& g, int n, int r, int edge_cap, std::uint64_t node_cap) {
  require_cycle_length(n);
  if (r < 1) throw InvalidInput("number of colors must be positive");
  const auto edges = g.edges();
  if (static_cast<int>(edges.size()) > edge_cap) {
    throw CapExceeded("arrow_check: " + std::to_string(edges.size()) +
                      " edges exceed the coloring cap of " + std::to_string(edge_cap));
  }
  ArrowVerdict verdict;
  std::vector<Adjacency> classes(static_cast<std::size_t>(r),
                                 Adjacency(static_cast<std::size_t>(g.vertex_count())));
  std::vector<int> colors(edges.size(), 0);
  auto dfs = [&](auto&& self, std::size_t i, int max_used) -> bool {
    if (++verdict.colorings_examined > node_cap) {
      throw CapExceeded("arrow_check: search exceeded " + std::to_string(node_cap) + " nodes");
    }
    if (i == edges.size()) return true;
    const auto& ed = edges[i];
    for (int c = 0; c <= std::min(r - 1, max_used + 1); ++c) {
      if (path_search(classes[c], ed.u, ed.v, n - 1, nullptr)) continue;
      add_edge(classes[c], ed.u, ed.v);
      colors[i] = c + 1;
      if (self(self, i + 1, std::max(max_used, c))) return true;
      remove_edge(classes[c], ed.u, ed.v);
    }
    return false;
  };
  if (dfs(dfs, 0, -1)) {
    EdgeColoring witness(g, colors, r);
    for (int c = 1; c <= r; ++c) {
      if (find_cycle_exact(witness.color_class(c), n, 0)) {
        throw std::logic_error("arrow_check witness has a monochromatic cycle");
      }
    }
    verdict.holds = false;
    verdict.witness = std::move(witness);
  } else {
    verdict.holds = true;
  }
  return verdict;
}

GammaVerdict gamma_arrow_check(const Graph& g, int n, int r, int edge_cap) {
  if (r < 1) throw InvalidInput("number of colors must be positive");
  GammaVerdict v;
  v.max_free = max_cnfree_edges(g, n, edge_cap);
  const double e = static_cast<double>(g.edge_count());
  v.threshold = e / r;
  // max_free < e / r, compared as integers: max_free * r < e.
  if (v.max_free.upper * r < static_cast<long>(g.edge_count())) {
    v.holds = true;
  } else if (v.max_free.lower * r >= static_cast<long>(g.edge_count())) {
    v.holds = false;
  } else {
    throw CapExceeded("gamma_arrow_check: interval [" + std::to_string(v.max_free.lower) + ", " +
                      std::to_string(v.max_free.upper) + "] straddles e(g)/r");
  }
  return v;
}

double lower_bound_value(long n, int r) {
  if (n < 2 || r < 2) throw InvalidInput("lower_bound_value needs n, r >= 2");
  return 3.75 * std::ldexp(1.0, r - 2) * static_cast<double>(n);
}

double constructive_threshold(long n, int r) {
  if (r < 1) throw InvalidInput("number of colors must be positive");
  return std::ldexp(1.0, r - 1) * static_cast<double>(n - 1);
}

AdversarialColoring adversarial_color_odd(const Graph& h, int n, int r) {
  require_cycle_length(n);
  if (n % 2 == 0) throw InvalidInput("adversarial_color_odd needs an odd cycle length");
  if (r < 1) throw InvalidInput("number of colors must be positive");
  const auto edges = h.edges();
  std::vector<int> colors(edges.size(), 1);
  std::vector<Edge> remaining = edges;
  for (int c = r; c >= 2; --c) {
    const auto split = bipartite_split(Graph::from_edges(h.vertex_count(), remaining));
    const auto taken = split.spanning.edges();
    for (const auto& ed : taken) colors[h.edge_index(ed.u, ed.v)] = c;
    std::vector<Edge> rest;
    std::set_difference(remaining.begin(), remaining.end(), taken.begin(), taken.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
  }
  AdversarialColoring out{EdgeColoring(h, std::move(colors), r), false, constructive_threshold(n, r),
                          r >= 2 ? lower_bound_value(n, r) : 0.0};
  out.guaranteed = static_cast<double>(edges.size()) <= out.threshold;
  return out;
}

PeelingOutcome run_peeling(const Graph& h, const EdgeColoring& coloring, int n, double alpha,
                           const PeelingOptions& options) {
  if (!(coloring.host() == h)) throw InvalidInput("coloring is not a coloring of h");
  const int half = h.vertex_count() / 2;
  if (half < 1) throw InvalidInput("run_peeling needs at least two vertices");

  std::vector<Vertex> ids(static_cast<std::size_t>(h.vertex_count()));
  std::iota(ids.begin(), ids.end(), 0);
  if (options.halves_seed) {
    CounterRng rng(*options.halves_seed);
    rng.shuffle(ids);
  }
  VertexSet v0(std::vector<Vertex>(ids.begin(), ids.begin() + half));
  VertexSet v1(std::vector<Vertex>(ids.begin() + half, ids.begin() + 2 * half));

  PeelingOutcome out;
  const int s = coloring.num_colors();
  for (int i = 1; i <= s; ++i) {
    const Graph cls = coloring.color_class(i);
    PeelingStep step;
    step.color = i;
    step.size_before = static_cast<int>(v0.size());
    const auto res = find_odd_cycle_or_structure(cls, v0, v1, n, alpha, options.pipeline);
    step.status = res.status;
    step.out_of_hypothesis = res.out_of_hypothesis;
    step.detail = res.detail;
    out.out_of_hypothesis = out.out_of_hypothesis || res.out_of_hypothesis;

    if (res.status == OddStatus::cycle) {
      step.size_after = step.size_before;
      out.steps.push_back(step);
      out.status = PeelingStatus::monochromatic_cycle;
      out.cycle = res.cycle;
      out.color = i;
      out.verified = is_cycle_of_length(cls, out.cycle, n);
      return out;
    }
    if (res.status == OddStatus::case_one) {
      v0 = res.case_one->a;
      v1 = res.case_one->b;
      step.size_after = static_cast<int>(v0.size());
      out.steps.push_back(step);
      if (i == s) {
        out.status = PeelingStatus::case_one;
        out.sets = {v0, v1};
        out.verified = edges_between(h, v0, v1) == 0;
        return out;
      }
      continue;
    }
    if (res.status == OddStatus::case_two) {
      step.size_after = static_cast<int>((*res.case_two)[0].size());
      out.steps.push_back(step);
      out.status = PeelingStatus::case_two;
      out.color = i;
      out.sets = *res.case_two;
      out.verified = edges_within(cls, out.sets[0]) == 0 && edges_within(cls, out.sets[1]) == 0;
      return out;
    }
    step.size_after = step.size_before;
    out.steps.push_back(step);
    out.status = PeelingStatus::inconclusive;
    return out;
  }
  return out;
}

std::string to_string(PeelingStatus status) {
  switch (status) {
    case PeelingStatus::monochromatic_cycle: return "monochromatic-cycle";
    case PeelingStatus::case_one: return "case-one";
    case PeelingStatus::case_two: return "case-two";
    case PeelingStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

}  // namespace cycram
