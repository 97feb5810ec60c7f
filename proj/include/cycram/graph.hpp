#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace cycram {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Undirected simple graph on vertices 0..n-1, optionally carrying a
/// two-part labeling (V0, V1). Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws InvalidInput on self-loops, duplicate edges, out-of-range ids,
  /// or (when labels are given) an edge inside one part.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges,
                          std::optional<std::vector<std::uint8_t>> part_labels = std::nullopt);

  /// Labeled bipartite graph: vertices 0..n0-1 form part 0, n0..n0+n1-1 part 1.
  static Graph bipartite(int n0, int n1, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Position of edge {u, v} in edges(); throws InvalidInput for a non-edge.
  std::size_t edge_index(Vertex u, Vertex v) const;

  bool is_labeled() const noexcept { return labels_.has_value(); }
  const std::optional<std::vector<std::uint8_t>>& part_labels() const noexcept { return labels_; }
  int part(Vertex v) const;
  std::vector<Vertex> part_members(int side) const;

  /// Same adjacency with a new labeling; validated like from_edges.
  Graph with_labels(std::optional<std::vector<std::uint8_t>> labels) const;

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_ && labels_ == other.labels_;
  }

 private:
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::size_t> edge_offset_;
  std::optional<std::vector<std::uint8_t>> labels_;
  std::size_t edge_count_ = 0;
};

/// Throws InvalidInput if any member of s is not a vertex of g.
void require_valid(const Graph& g, const VertexSet& s);

/// Union of the neighbor sets of the members of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Number of edges xy with x in a and y in b. An edge with both ends in
/// a ∩ b is counted once.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Number of edges with both ends in s.
std::size_t edges_within(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the parent graph
};

/// Vertices of s relabeled 0..|s|-1 in increasing order; labels restricted.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Spanning subgraph keeping only the listed edges (which must be edges of g).
Graph spanning_subgraph(const Graph& g, std::span<const Edge> keep);

struct BipartiteSplit {
  Graph spanning;  // labeled: side_a -> 0, side_b -> 1
  VertexSet side_a;
  VertexSet side_b;
};

/// Spanning bipartite subgraph with at least half the edges, found by
/// local switching from a breadth-first 2-coloring.
BipartiteSplit bipartite_split(const Graph& g);

/// Graphs used as fixtures by tests, the CLI and the bindings.
namespace families {
Graph complete(int n);
Graph complete_bipartite(int n0, int n1);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
}  // namespace families

}  // namespace cycram
