#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "../oracles.hpp"
#include "cycram/edge_coloring.hpp"
#include "cycram/errors.hpp"
#include "cycram/graph.hpp"
#include "cycram/graph_io.hpp"

using namespace cycram;

TEST_CASE("neighborhood") {
  const Graph c4 = families::cycle(4);
  CHECK(neighborhood(c4, {0}) == VertexSet{1, 3});
  CHECK(neighborhood(c4, {}).empty());

  const Graph pet = families::petersen();
  std::set<Vertex> expect;
  for (Vertex v : {0, 1}) {
    for (Vertex w : pet.neighbors(v)) expect.insert(w);
  }
  const VertexSet got = neighborhood(pet, {0, 1});
  CHECK(got.size() == 6);
  CHECK(std::equal(got.begin(), got.end(), expect.begin(), expect.end()));

  CHECK_THROWS_AS(neighborhood(c4, {7}), InvalidInput);
}

TEST_CASE("edges_between and edges_within") {
  const Graph k33 = families::complete_bipartite(3, 3);
  CHECK(edges_between(k33, {0, 1, 2}, {3, 4, 5}) == 9);
  CHECK(edges_between(k33, {}, {3, 4, 5}) == 0);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = oracle::random_graph(12, 0.4, seed);
    CounterRng rng(seed * 77);
    const VertexSet a(rng.sample(12, 4));
    const VertexSet b(rng.sample(12, 4));
    std::set<std::pair<int, int>> seen;
    for (Vertex x : a) {
      for (Vertex y : b) {
        if (g.has_edge(x, y)) seen.insert({std::min(x, y), std::max(x, y)});
      }
    }
    CHECK(edges_between(g, a, b) == seen.size());
    CHECK(edges_between(g, a, b) == edges_between(g, b, a));
  }

  CHECK(edges_within(families::complete(5), {0, 1, 2}) == 3);
}

TEST_CASE("degree sum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(15, 0.3, seed);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("construction rejects bad input") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidInput);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), InvalidInput);
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, range), InvalidInput);
  const std::vector<Edge> inside{{0, 1}};
  CHECK_THROWS_AS(Graph::bipartite(2, 2, inside), InvalidInput);
}

TEST_CASE("induced_subgraph") {
  const auto k3 = induced_subgraph(families::complete(5), {1, 3, 4});
  CHECK(k3.graph == families::complete(3));
  CHECK(k3.original == std::vector<Vertex>{1, 3, 4});

  const Graph kb = families::complete_bipartite(3, 4);
  const auto side = induced_subgraph(kb, VertexSet(kb.part_members(1)));
  CHECK(side.graph.edge_count() == 0);
  CHECK(side.graph.is_labeled());

  const Graph pet = families::petersen();
  // find an independent 4-set by scanning
  std::vector<Vertex> ind;
  oracle::each_subset((1u << 10) - 1, [&](std::uint64_t m) {
    if (!ind.empty() || std::popcount(m) != 4) return;
    std::vector<Vertex> s;
    for (int v = 0; v < 10; ++v) {
      if (m >> v & 1) s.push_back(v);
    }
    for (Vertex x : s) {
      for (Vertex y : s) {
        if (pet.has_edge(x, y)) return;
      }
    }
    ind = s;
  });
  REQUIRE(ind.size() == 4);
  const auto sub = induced_subgraph(pet, VertexSet(ind));
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.graph.edge_count() == 0);

  const Graph g = oracle::random_graph(9, 0.5, 3);
  std::vector<Vertex> all(9);
  for (int i = 0; i < 9; ++i) all[i] = i;
  CHECK(induced_subgraph(g, VertexSet(all)).graph == g);
}

TEST_CASE("bipartite_split") {
  const auto k3 = bipartite_split(families::complete(3));
  CHECK(k3.spanning.edge_count() == 2);

  // max cut of K4 by scanning all 2-partitions
  const Graph k4 = families::complete(4);
  std::size_t best = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::size_t cut = 0;
    for (const Edge& e : k4.edges()) cut += ((mask >> e.u) & 1) != ((mask >> e.v) & 1);
    best = std::max(best, cut);
  }
  CHECK(best == 4);
  CHECK(bipartite_split(k4).spanning.edge_count() == best);

  const Graph kb = families::complete_bipartite(4, 5);
  CHECK(bipartite_split(kb).spanning.edge_count() == kb.edge_count());

  const auto empty = bipartite_split(Graph(5));
  CHECK(empty.spanning.edge_count() == 0);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 39);
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * ((seed * 7) % 10) / 10.0, seed);
    const auto split = bipartite_split(g);
    REQUIRE(split.spanning.vertex_count() == n);
    REQUIRE(2 * split.spanning.edge_count() >= g.edge_count());
    for (const Edge& e : split.spanning.edges()) {
      REQUIRE(g.has_edge(e.u, e.v));
      REQUIRE(split.side_a.contains(e.u) != split.side_a.contains(e.v));
    }
    REQUIRE(split.side_a.size() + split.side_b.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("edge list io") {
  std::istringstream path3("3 2\n0 1\n1 2\n");
  // "3 2" is a bipartite header: part 0 = {0,1,2}; edge 0-1 lies inside it
  CHECK_THROWS_AS(parse_graph(path3), ParseError);

  std::istringstream plain("# comment\n3\n0 1\n1 2\n");
  CHECK(parse_graph(plain) == families::path(3));

  std::istringstream empty("4\n");
  CHECK(parse_graph(empty).edge_count() == 0);

  std::istringstream bad("3\n0 1\n0 1\n");
  try {
    parse_graph(bad, "x.el");
    FAIL("duplicate edge accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream range("3\n0 5\n");
  CHECK_THROWS_AS(parse_graph(range), ParseError);
  std::istringstream header("x\n");
  CHECK_THROWS_AS(parse_graph(header), ParseError);

  const auto dir = std::filesystem::temp_directory_path();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = oracle::random_graph(14, 0.3, seed);
    write_graph(g, dir / "cycram_rt.el");
    CHECK(read_graph(dir / "cycram_rt.el") == g);
    const Graph b = oracle::random_bipartite(5, 7, 0.4, seed);
    write_graph(b, dir / "cycram_rt.el");
    CHECK(read_graph(dir / "cycram_rt.el") == b);
  }
  std::filesystem::remove(dir / "cycram_rt.el");
}

TEST_CASE("edge coloring") {
  const Graph k4 = families::complete(4);
  CHECK_THROWS_AS(EdgeColoring(k4, {1, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(EdgeColoring(k4, {1, 2, 3, 1, 1, 1}, 2), InvalidInput);
  const EdgeColoring c(k4, {1, 2, 1, 2, 1, 2}, 2);
  CHECK(c.color(1, 0) == 1);
  CHECK(c.color_class(1).edge_count() + c.color_class(2).edge_count() == 6);

  std::ostringstream out;
  format_coloring(c, out);
  std::istringstream in(out.str());
  CHECK(parse_coloring(in) == c);
}
