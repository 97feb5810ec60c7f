#include "cycram/edge_coloring.hpp"

#include <string>

#include "cycram/errors.hpp"

namespace cycram {

EdgeColoring::EdgeColoring(Graph host, std::vector<int> colors, int num_colors)
    : host_(std::move(host)), colors_(std::move(colors)), num_colors_(num_colors) {
  if (num_colors_ < 1) throw InvalidInput("a coloring needs at least one color");
  if (colors_.size() != host_.edge_count()) {
    throw InvalidInput("coloring has " + std::to_string(colors_.size()) + " entries for " +
                       std::to_string(host_.edge_count()) + " edges");
  }
  for (int c : colors_) {
    if (c < 1 || c > num_colors_) {
      throw InvalidInput("color " + std::to_string(c) + " outside 1.." +
                         std::to_string(num_colors_));
    }
  }
}

Graph EdgeColoring::color_class(int c) const {
  std::vector<Edge> keep;
  const auto edges = host_.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (colors_[i] == c) keep.push_back(edges[i]);
  }
  return Graph::from_edges(host_.vertex_count(), keep, host_.part_labels());
}

}  // namespace cycram
