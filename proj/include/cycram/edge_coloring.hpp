#pragma once

#include <span>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

/// Assignment of a color in 1..r to every edge of a host graph, stored in
/// the host's edges() order.
class EdgeColoring {
 public:
  /// Throws InvalidInput unless colors has one entry per host edge, all in 1..num_colors.
  EdgeColoring(Graph host, std::vector<int> colors, int num_colors);

  const Graph& host() const noexcept { return host_; }
  int num_colors() const noexcept { return num_colors_; }
  std::span<const int> colors() const noexcept { return colors_; }
  int color(Vertex u, Vertex v) const { return colors_.at(host_.edge_index(u, v)); }

  /// Spanning subgraph formed by the edges of color c (the color class H^c).
  Graph color_class(int c) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  Graph host_;
  std::vector<int> colors_;
  int num_colors_;
};

}  // namespace cycram
