#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "cycram/errors.hpp"
#include "cycram/random_models.hpp"

using namespace cycram;

TEST_CASE("chernoff_bound") {
  CHECK(chernoff_bound(100, 0.5) == doctest::Approx(2 * std::exp(-25.0 / 3)));
  CHECK(chernoff_bound(10, 1e-9) == doctest::Approx(2));
  CHECK_THROWS_AS(chernoff_bound(10, 0), DomainError);
  CHECK_THROWS_AS(chernoff_bound(10, 1.6), DomainError);
  CHECK_THROWS_AS(chernoff_bound(0, 0.5), DomainError);

  const long double tail = oracle::binomial_tail(20, 0.3L, 3);
  CHECK(tail <= chernoff_bound(6, 0.5));
  CHECK(std::fabs(binomial_two_sided_tail(20, 0.3, 3) - tail) < 1e-12L);
}

TEST_CASE("delta_threshold") {
  CHECK(delta_threshold(1, 6, 1) == doctest::Approx(1));
  CHECK(delta_threshold(2.5, 6, 2.5) == doctest::Approx(std::sqrt(1 / 2.5)));
  const double c3 = 6 * std::log(2.0);
  CHECK(delta_threshold(std::ldexp(1.0, 32), 32, c3) < 1);
  for (int r = 2; r <= 5; ++r) {
    const double c1 = std::ldexp(1.0, 8 * r * r);
    const double c2 = 8.0 * r * r;
    CHECK(std::sqrt(6 * std::log(c1) / (c2 * c3)) == doctest::Approx(1));
  }
}

TEST_CASE("h_function") {
  CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double x = 0.1 + 9 * rng.next_unit();
    const double y = 0.1 + 9 * rng.next_unit();
    CHECK(h_function(x, y, 10, 3, 0.7) == doctest::Approx(h_function(y, x, 10, 3, 0.7)));
  }
  CHECK_THROWS_AS(h_function(0, 1, 10, 3, 0.5), DomainError);
  const double c1 = 16, c2 = 5, c3 = 1.5;
  const double d = delta_threshold(c1, c2, c3) * 1.001;
  CHECK(h_function(c3, c3, c1, c2, d) < 0);
}

TEST_CASE("samplers") {
  ParamSet p;
  p.c1 = 4;
  p.n = 3;
  p.c2 = 3;  // p = 1
  const Graph full = sample_bipartite(p, 9);
  CHECK(full.edge_count() == 144);
  CHECK(full.is_labeled());
  CHECK(sample_graph(p, 9).edge_count() == 66);
  p.c2 = 0;
  CHECK(sample_bipartite(p, 9).edge_count() == 0);
  CHECK(sample_graph(p, 9).edge_count() == 0);
  p.c2 = 4;  // p > 1
  CHECK_THROWS(sample_bipartite(p, 9));

  p.c2 = 0.9;
  CHECK(sample_bipartite(p, 42) == sample_bipartite(p, 42));
  CHECK(sample_graph(p, 42) == sample_graph(p, 42));
  CHECK(!(sample_bipartite(p, 42) == sample_bipartite(p, 43)));
}

TEST_CASE("bipartite sampler mean") {
  ParamSet p;
  p.c1 = 200;
  p.n = 1;
  p.c2 = 0.1;
  double sum = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) sum += static_cast<double>(sample_bipartite(p, s).edge_count());
  const double sd = std::sqrt(200.0 * 200 * 0.1 * 0.9);
  CHECK(std::fabs(sum / seeds - 4000) <= 3 * sd);
}

TEST_CASE("graph sampler window") {
  ParamSet p;
  p.c1 = 300;
  p.n = 1;
  p.c2 = 0.05;
  p.eps = 0.1;
  const EdgeWindow w = edge_count_window(p, Model::graph);
  // (1 ± eps) c1 c2 (c1 n - 1) / 2
  CHECK(w.lower == doctest::Approx(0.9 * 300 * 0.05 * 299 / 2));
  int inside = 0;
  for (int s = 0; s < 100; ++s) {
    const double e = static_cast<double>(sample_graph(p, s).edge_count());
    inside += e >= w.lower && e <= w.upper;
  }
  CHECK(inside >= 95);
}

TEST_CASE("verify_density") {
  ParamSet p;
  p.c1 = 3;
  p.n = 4;
  p.c2 = 4;  // p = 1
  p.c3 = 1;
  p.delta = 0.1;
  const Graph k = families::complete_bipartite(12, 12);
  auto rep = verify_density(k, p, Model::bipartite);
  CHECK(rep.property2_ok);
  REQUIRE(rep.worst_pair);
  CHECK(rep.worst_pair->ratio == 0);

  p.c2 = 2;
  rep = verify_density(Graph::bipartite(12, 12, {}), p, Model::bipartite);
  CHECK(!rep.property2_ok);
  CHECK(rep.worst_pair->ratio == doctest::Approx(1));

  p.c3 = 4;  // 16 > part size
  CHECK_THROWS_AS(verify_density(k, p, Model::bipartite), InvalidInput);
}

TEST_CASE("verify_density matches subset-pair scan") {
  ParamSet p;
  p.c1 = 3;
  p.n = 4;
  p.c2 = 1.6;  // p = 0.4
  p.c3 = 1;    // size 4
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Graph g = sample_bipartite(p, seed);
    const auto adj = oracle::adjacency_masks(g);
    const std::uint64_t v0 = oracle::side_mask(g, 0), v1 = oracle::side_mask(g, 1);
    double worst = 0;
    std::uint64_t pairs = 0;
    oracle::each_subset(v0, [&](std::uint64_t u) {
      if (std::popcount(u) != 4) return;
      oracle::each_subset(v1, [&](std::uint64_t w) {
        if (std::popcount(w) != 4) return;
        ++pairs;
        int e = 0;
        for (std::uint64_t x = u; x; x &= x - 1) e += std::popcount(adj[std::countr_zero(x)] & w);
        worst = std::max(worst, std::fabs(e - 0.4 * 16) / (0.4 * 16));
      });
    });
    for (double delta : {0.5, worst, 0.99}) {
      p.delta = delta;
      const auto rep = verify_density(g, p, Model::bipartite);
      CHECK(rep.pairs_checked == pairs);
      CHECK(rep.worst_pair->ratio == doctest::Approx(worst));
      CHECK(rep.property2_ok == (worst <= delta));
    }
  }
}
