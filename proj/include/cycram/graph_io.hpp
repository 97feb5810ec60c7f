#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cycram/edge_coloring.hpp"
#include "cycram/graph.hpp"

namespace cycram {

// Edge-list format:
//   first non-comment line: "N", or "N0 N1" for a labeled bipartite graph
//   (vertices 0..N0-1 in part 0, N0..N0+N1-1 in part 1);
//   then one "u v" per edge with u < v; lines starting with '#' are comments.
// Coloring files use the same header and "u v c" lines.

Graph parse_graph(std::istream& in, const std::string& source = "<stream>");
Graph read_graph(const std::filesystem::path& path);

/// Labeled graphs must have part 0 = 0..N0-1 (as produced by the samplers);
/// otherwise InvalidInput is thrown rather than silently dropping the labels.
void format_graph(const Graph& g, std::ostream& out);
void write_graph(const Graph& g, const std::filesystem::path& path);

/// num_colors <= 0 means "largest color present" (at least 1).
EdgeColoring parse_coloring(std::istream& in, const std::string& source = "<stream>",
                            int num_colors = 0);
EdgeColoring read_coloring(const std::filesystem::path& path, int num_colors = 0);
void format_coloring(const EdgeColoring& coloring, std::ostream& out);
void write_coloring(const EdgeColoring& coloring, const std::filesystem::path& path);

}  // namespace cycram
