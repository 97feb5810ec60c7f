#include "cycram/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cycram/errors.hpp"

namespace cycram {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  adjacency_.resize(vertex_count);
  finalize();
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges,
                        std::optional<std::vector<std::uint8_t>> part_labels) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") out of range for " + std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      throw InvalidInput("duplicate edge (" + std::to_string(std::min(v, *dup)) + ", " +
                         std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.finalize();
  if (part_labels) return g.with_labels(std::move(part_labels));
  return g;
}

Graph Graph::bipartite(int n0, int n1, std::span<const Edge> edges) {
  if (n0 < 0 || n1 < 0) throw InvalidInput("negative part size");
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n0 + n1), 0);
  std::fill(labels.begin() + n0, labels.end(), 1);
  return from_edges(n0 + n1, edges, std::move(labels));
}

void Graph::finalize() {
  edge_offset_.assign(adjacency_.size() + 1, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    edge_offset_[v] = total;
    const auto& nb = adjacency_[v];
    total += static_cast<std::size_t>(
        nb.end() - std::upper_bound(nb.begin(), nb.end(), static_cast<Vertex>(v)));
  }
  edge_offset_[adjacency_.size()] = total;
  edge_count_ = total;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (!has_edge(u, v)) {
    throw InvalidInput("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  const auto& nb = adjacency_[u];
  auto first = std::upper_bound(nb.begin(), nb.end(), u);
  auto pos = std::lower_bound(first, nb.end(), v);
  return edge_offset_[u] + static_cast<std::size_t>(pos - first);
}

int Graph::part(Vertex v) const {
  if (!labels_) throw NotBipartite("graph carries no bipartition labels");
  return labels_->at(v);
}

std::vector<Vertex> Graph::part_members(int side) const {
  if (!labels_) throw NotBipartite("graph carries no bipartition labels");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if ((*labels_)[v] == side) out.push_back(v);
  }
  return out;
}

Graph Graph::with_labels(std::optional<std::vector<std::uint8_t>> labels) const {
  Graph g = *this;
  if (labels) {
    if (labels->size() != adjacency_.size()) {
      throw InvalidInput("label vector size does not match vertex count");
    }
    for (auto l : *labels) {
      if (l > 1) throw InvalidInput("part labels must be 0 or 1");
    }
    for (const auto& [u, v] : edges()) {
      if ((*labels)[u] == (*labels)[v]) {
        throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") lies inside part " + std::to_string((*labels)[u]));
      }
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

void require_valid(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.members().front() < 0 || s.members().back() >= g.vertex_count())) {
    throw InvalidInput("vertex set refers to ids outside 0.." +
                       std::to_string(g.vertex_count() - 1));
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) mark[y] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_valid(g, a);
  require_valid(g, b);
  std::size_t count = 0;
  for (Vertex x : a) {
    for (Vertex y : g.neighbors(x)) {
      if (!b.contains(y)) continue;
      // An edge inside a ∩ b is seen from both ends; keep the x < y sighting.
      if (a.contains(y) && b.contains(x) && y < x) continue;
      ++count;
    }
  }
  return count;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  std::size_t count = 0;
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && s.contains(y)) ++count;
    }
  }
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> original(s.begin(), s.end());
  for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex x : original) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && local[y] >= 0) edges.push_back({local[x], local[y]});
    }
  }
  std::optional<std::vector<std::uint8_t>> labels;
  if (g.is_labeled()) {
    labels.emplace();
    for (Vertex x : original) labels->push_back(static_cast<std::uint8_t>(g.part(x)));
  }
  return {Graph::from_edges(static_cast<int>(original.size()), edges, std::move(labels)),
          std::move(original)};
}

Graph spanning_subgraph(const Graph& g, std::span<const Edge> keep) {
  for (const auto& e : keep) {
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidInput("(" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") is not an edge of the host");
    }
  }
  return Graph::from_edges(g.vertex_count(), keep, g.part_labels());
}

BipartiteSplit bipartite_split(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 2);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == 2) {
          side[y] = static_cast<std::uint8_t>(1 - side[x]);
          queue.push_back(y);
        }
      }
    }
  }

  // Every move strictly increases the cut, so the loop ends.
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      int same = 0;
      for (Vertex y : g.neighbors(v)) same += side[y] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] = static_cast<std::uint8_t>(1 - side[v]);
        moved = true;
        break;
      }
    }
  }

  std::vector<Edge> kept;
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
  for (const auto& e : g.edges()) {
    if (side[e.u] != side[e.v]) kept.push_back(e);
  }
  return {Graph::from_edges(n, kept, side), VertexSet(std::move(a)), VertexSet(std::move(b))};
}

namespace families {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int n0, int n1) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n0; ++u)
    for (Vertex v = 0; v < n1; ++v) edges.push_back({u, n0 + v});
  return Graph::bipartite(n0, n1, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    edges.push_back({i, i + 5});
    Vertex a = 5 + i, b = 5 + (i + 2) % 5;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph::from_edges(10, edges);
}

}  // namespace families

}  // namespace cycram
