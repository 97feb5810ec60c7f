#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

/// Rooted tree on vertices 0..n-1 given by a parent array (parent[root] = -1),
/// optionally carrying two disjoint marked leaf sets X0, X1.
class RootedTree {
 public:
  RootedTree() = default;

  /// InvalidInput unless the parent array describes a single connected tree.
  static RootedTree from_parents(std::vector<Vertex> parent,
                                 std::optional<std::array<VertexSet, 2>> marks = std::nullopt);

  int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }
  Vertex root() const noexcept { return root_; }
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  Vertex parent(Vertex v) const { return parent_.at(v); }
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  int depth(Vertex v) const { return depth_.at(v); }
  int height() const noexcept { return height_; }
  /// Vertices without children, ascending.
  std::vector<Vertex> leaves() const;
  int root_degree() const { return static_cast<int>(children_.at(root_).size()); }
  /// Largest undirected degree.
  int max_degree() const;

  const std::optional<std::array<VertexSet, 2>>& marks() const noexcept { return marks_; }

  /// Vertices of the unique u-v path, u first.
  std::vector<Vertex> path(Vertex u, Vertex v) const;
  int distance(Vertex u, Vertex v) const;

  /// Unlabeled graph with the tree edges.
  Graph as_graph() const;

  bool operator==(const RootedTree& other) const {
    return parent_ == other.parent_ && marks_ == other.marks_;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> depth_;
  Vertex root_ = 0;
  int height_ = 0;
  std::optional<std::array<VertexSet, 2>> marks_;
};

/// ceil(log2 L) for L >= 1.
int ceil_log2(long leaves);

/// Binary tree with exactly L leaves, all at depth ceil(log2 L). Level d holds
/// ceil(L / 2^(h-d)) vertices numbered left to right; vertex j of level d has
/// parent j / 2 of level d - 1. Unary internal vertices remain when L is not a
/// power of two. DomainError for L < 1.
RootedTree build_binary_tree(long leaves);

/// Two binary trees with L leaves whose roots are joined by a path of length
/// n - 1 - 2 ceil(log2 L). Rooted at the first tree's root; X0, X1 mark the
/// two leaf sets, every cross pair at distance n - 1.
RootedTree build_even_gadget(long n, long leaves);

struct OddGadgets {
  RootedTree t0;  // binary tree with L leaves, marks X0 = leaves, X1 empty
  RootedTree t1;  // path root..y of length path_length, binary tree at y; X1 = its leaves
  int path_length = 0;
};

/// Gadget pair for odd cycles: depth_T0(u0) + depth_T1(u1) = n - 2 for all marked leaves.
OddGadgets build_odd_gadgets(long n, long leaves);

struct TreeCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Structural checks: degree bound, leaf count, mark disjointness, and that
/// every mark is a leaf at the given depth (when depth >= 0).
TreeCheck validate_tree(const RootedTree& tree, int max_degree, std::optional<int> leaf_count,
                        int mark_depth = -1);

}  // namespace cycram
