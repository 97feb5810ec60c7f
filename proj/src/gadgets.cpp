#include "cycram/gadgets.hpp"

#include <algorithm>
#include <string>

#include "cycram/errors.hpp"

namespace cycram {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent,
                                    std::optional<std::array<VertexSet, 2>> marks) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw InvalidInput("tree must have at least one vertex");
  RootedTree t;
  t.children_.assign(parent.size(), {});
  int roots = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent[v];
    if (p == -1) {
      ++roots;
      t.root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw InvalidInput("vertex " + std::to_string(v) + " has invalid parent " +
                         std::to_string(p));
    } else {
      t.children_[p].push_back(v);
    }
  }
  if (roots != 1) throw InvalidInput("tree must have exactly one root, found " + std::to_string(roots));

  t.depth_.assign(parent.size(), -1);
  t.depth_[t.root_] = 0;
  std::vector<Vertex> queue{t.root_};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex c : t.children_[queue[i]]) {
      t.depth_[c] = t.depth_[queue[i]] + 1;
      t.height_ = std::max(t.height_, t.depth_[c]);
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    throw InvalidInput("parent array contains a cycle or a detached part");
  }
  if (marks) {
    for (const auto& side : *marks) {
      for (Vertex v : side) {
        if (v < 0 || v >= n) throw InvalidInput("marked vertex " + std::to_string(v) + " out of range");
      }
    }
  }
  t.parent_ = std::move(parent);
  t.marks_ = std::move(marks);
  return t;
}

std::vector<Vertex> RootedTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (children_[v].empty()) out.push_back(v);
  }
  return out;
}

int RootedTree::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    best = std::max(best, static_cast<int>(children_[v].size()) + (parent_[v] >= 0 ? 1 : 0));
  }
  return best;
}

std::vector<Vertex> RootedTree::path(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) {
    throw InvalidInput("path endpoint out of range");
  }
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  while (depth_[u] > depth_[v]) {
    up.push_back(u);
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    down.push_back(v);
    v = parent_[v];
  }
  while (u != v) {
    up.push_back(u);
    down.push_back(v);
    u = parent_[u];
    v = parent_[v];
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int RootedTree::distance(Vertex u, Vertex v) const {
  return static_cast<int>(path(u, v).size()) - 1;
}

Graph RootedTree::as_graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (parent_[v] >= 0) edges.push_back({std::min(v, parent_[v]), std::max(v, parent_[v])});
  }
  return Graph::from_edges(vertex_count(), edges);
}

int ceil_log2(long leaves) {
  if (leaves < 1) throw DomainError("ceil_log2 requires a positive argument");
  int h = 0;
  while ((1L << h) < leaves) ++h;
  return h;
}

namespace {

// Appends a binary tree with `leaves` leaves below `attach` (or as a new root
// when attach < 0); returns its leaf ids.
std::vector<Vertex> append_binary_tree(std::vector<Vertex>& parent, Vertex attach, long leaves,
                                       Vertex* root_out) {
  const int h = ceil_log2(leaves);
  std::vector<Vertex> prev;
  for (int d = 0; d <= h; ++d) {
    const long span = 1L << (h - d);
    const long count = (leaves + span - 1) / span;
    std::vector<Vertex> level;
    for (long j = 0; j < count; ++j) {
      const Vertex id = static_cast<Vertex>(parent.size());
      parent.push_back(d == 0 ? attach : prev[static_cast<std::size_t>(j / 2)]);
      level.push_back(id);
    }
    if (d == 0 && root_out) *root_out = level.front();
    prev = std::move(level);
  }
  return prev;
}

void require_leaves(long leaves) {
  if (leaves < 1) throw DomainError("leaf count must be at least 1, got " + std::to_string(leaves));
}

}  // namespace

RootedTree build_binary_tree(long leaves) {
  require_leaves(leaves);
  std::vector<Vertex> parent;
  append_binary_tree(parent, -1, leaves, nullptr);
  return RootedTree::from_parents(std::move(parent));
}

RootedTree build_even_gadget(long n, long leaves) {
  require_leaves(leaves);
  if (n % 2 != 0) throw InvalidInput("even gadget needs an even cycle length, got " + std::to_string(n));
  const int h = ceil_log2(leaves);
  const long len = n - 1 - 2L * h;
  if (len < 1) {
    throw InfeasibleParameters("path length n - 1 - 2 ceil(log2 L) = " + std::to_string(len) +
                               " is below 1");
  }
  std::vector<Vertex> parent;
  Vertex root0 = 0;
  auto x0 = append_binary_tree(parent, -1, leaves, &root0);
  Vertex tail = root0;
  for (long i = 1; i < len; ++i) {
    parent.push_back(tail);
    tail = static_cast<Vertex>(parent.size()) - 1;
  }
  auto x1 = append_binary_tree(parent, tail, leaves, nullptr);
  return RootedTree::from_parents(std::move(parent),
                                  std::array<VertexSet, 2>{VertexSet(x0), VertexSet(x1)});
}

OddGadgets build_odd_gadgets(long n, long leaves) {
  require_leaves(leaves);
  if (n % 2 == 0) throw InvalidInput("odd gadgets need an odd cycle length, got " + std::to_string(n));
  const int h = ceil_log2(leaves);
  const long len = n - 2 - 2L * h;
  if (len < 1) {
    throw InfeasibleParameters("path length n - 2 - 2 ceil(log2 L) = " + std::to_string(len) +
                               " is below 1");
  }
  OddGadgets out;
  out.path_length = static_cast<int>(len);

  std::vector<Vertex> p0;
  auto x0 = append_binary_tree(p0, -1, leaves, nullptr);
  out.t0 = RootedTree::from_parents(std::move(p0), std::array<VertexSet, 2>{VertexSet(x0), VertexSet()});

  std::vector<Vertex> p1{-1};
  Vertex tail = 0;
  for (long i = 1; i < len; ++i) {
    p1.push_back(tail);
    tail = static_cast<Vertex>(p1.size()) - 1;
  }
  auto x1 = append_binary_tree(p1, tail, leaves, nullptr);
  out.t1 = RootedTree::from_parents(std::move(p1), std::array<VertexSet, 2>{VertexSet(), VertexSet(x1)});
  return out;
}

TreeCheck validate_tree(const RootedTree& tree, int max_degree, std::optional<int> leaf_count,
                        int mark_depth) {
  TreeCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.problems.push_back(std::move(msg));
  };
  if (tree.max_degree() > max_degree) {
    fail("max degree " + std::to_string(tree.max_degree()) + " exceeds " + std::to_string(max_degree));
  }
  const auto leaves = tree.leaves();
  if (leaf_count && static_cast<int>(leaves.size()) != *leaf_count) {
    fail("leaf count " + std::to_string(leaves.size()) + " differs from " + std::to_string(*leaf_count));
  }
  if (const auto& marks = tree.marks()) {
    for (int side = 0; side < 2; ++side) {
      for (Vertex v : (*marks)[side]) {
        if (!tree.children(v).empty()) fail("marked vertex " + std::to_string(v) + " is not a leaf");
        if (mark_depth >= 0 && tree.depth(v) != mark_depth) {
          fail("marked leaf " + std::to_string(v) + " has depth " + std::to_string(tree.depth(v)));
        }
        if ((*marks)[1 - side].contains(v)) fail("vertex " + std::to_string(v) + " marked twice");
      }
    }
  }
  return check;
}

}  // namespace cycram
