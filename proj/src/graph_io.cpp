#include "cycram/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

#include "cycram/errors.hpp"

namespace cycram {
namespace {

struct Header {
  int n0 = 0;
  int n1 = -1;  // -1: unlabeled
  int total() const { return n1 < 0 ? n0 : n0 + n1; }
};

struct RawEdge {
  Edge edge;
  int color = 0;
};

std::vector<long long> split_ints(std::string_view line, const std::string& source,
                                  std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                              *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(source, lineno, "expected integers, got '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::pair<Header, std::vector<RawEdge>> parse_lines(std::istream& in, const std::string& source,
                                                    bool colored) {
  Header header;
  bool have_header = false;
  std::vector<RawEdge> edges;
  std::set<Edge> seen;
  std::string line;
  std::size_t lineno = 0;
  const std::size_t expected = colored ? 3 : 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto values = split_ints(line, source, lineno);
    if (!have_header) {
      if (values.empty() || values.size() > 2 ||
          std::any_of(values.begin(), values.end(), [](long long x) { return x < 0 || x > (1LL << 30); })) {
        throw ParseError(source, lineno, "malformed header (expected 'N' or 'N0 N1')");
      }
      header.n0 = static_cast<int>(values[0]);
      if (values.size() == 2) header.n1 = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != expected) {
      throw ParseError(source, lineno,
                       colored ? "expected 'u v c'" : "expected 'u v'");
    }
    const long long u = values[0], v = values[1];
    if (u < 0 || v < 0 || u >= header.total() || v >= header.total()) {
      throw ParseError(source, lineno, "vertex id out of range");
    }
    if (u == v) throw ParseError(source, lineno, "self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (header.n1 >= 0 && ((e.u < header.n0) == (e.v < header.n0))) {
      throw ParseError(source, lineno, "edge inside one part of a bipartite header");
    }
    if (!seen.insert(e).second) throw ParseError(source, lineno, "duplicate edge");
    RawEdge raw{e, 0};
    if (colored) {
      if (values[2] < 1 || values[2] > (1LL << 30)) {
        throw ParseError(source, lineno, "color must be a positive integer");
      }
      raw.color = static_cast<int>(values[2]);
    }
    edges.push_back(raw);
  }
  if (!have_header) throw ParseError(source, lineno, "missing header");
  return {header, std::move(edges)};
}

Graph build(const Header& header, const std::vector<RawEdge>& raw) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) edges.push_back(r.edge);
  if (header.n1 >= 0) return Graph::bipartite(header.n0, header.n1, edges);
  return Graph::from_edges(header.n0, edges);
}

void write_header(const Graph& g, std::ostream& out) {
  if (!g.is_labeled()) {
    out << g.vertex_count() << '\n';
    return;
  }
  const auto zeros = g.part_members(0);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (zeros[i] != static_cast<Vertex>(i)) {
      throw InvalidInput("edge-list header can only express part 0 = 0..N0-1");
    }
  }
  out << zeros.size() << ' ' << (g.vertex_count() - static_cast<int>(zeros.size())) << '\n';
}

template <class Fn>
void with_input(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  fn(in);
}

template <class Fn>
void with_output(const std::filesystem::path& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  fn(out);
  if (!out) throw InvalidInput("error writing " + path.string());
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  auto [header, raw] = parse_lines(in, source, false);
  return build(header, raw);
}

Graph read_graph(const std::filesystem::path& path) {
  Graph g;
  with_input(path, [&](std::istream& in) { g = parse_graph(in, path.string()); });
  return g;
}

void format_graph(const Graph& g, std::ostream& out) {
  write_header(g, out);
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  with_output(path, [&](std::ostream& out) { format_graph(g, out); });
}

EdgeColoring parse_coloring(std::istream& in, const std::string& source, int num_colors) {
  auto [header, raw] = parse_lines(in, source, true);
  Graph host = build(header, raw);
  std::vector<int> colors(host.edge_count(), 0);
  int max_color = 1;
  for (const auto& r : raw) {
    colors[host.edge_index(r.edge.u, r.edge.v)] = r.color;
    max_color = std::max(max_color, r.color);
  }
  return EdgeColoring(std::move(host), std::move(colors),
                      num_colors > 0 ? num_colors : max_color);
}

EdgeColoring read_coloring(const std::filesystem::path& path, int num_colors) {
  std::optional<EdgeColoring> c;
  with_input(path, [&](std::istream& in) { c.emplace(parse_coloring(in, path.string(), num_colors)); });
  return std::move(*c);
}

void format_coloring(const EdgeColoring& coloring, std::ostream& out) {
  write_header(coloring.host(), out);
  const auto edges = coloring.host().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << edges[i].u << ' ' << edges[i].v << ' ' << coloring.colors()[i] << '\n';
  }
}

void write_coloring(const EdgeColoring& coloring, const std::filesystem::path& path) {
  with_output(path, [&](std::ostream& out) { format_coloring(coloring, out); });
}

}  // namespace cycram
