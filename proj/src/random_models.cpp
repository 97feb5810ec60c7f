#include "cycram/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cycram/errors.hpp"
#include "cycram/numeric.hpp"
#include "cycram/rng.hpp"
#include "detail/bipartite_masks.hpp"

namespace cycram {
namespace {

using detail::BipartiteMasks;
using detail::Mask;

void require_probability(const ParamSet& params) {
  if (params.n <= 0 || params.c1 <= 0) throw InvalidInput("n and c1 must be positive");
  const double p = params.p();
  if (!(p >= 0) || p > 1) throw InvalidInput("edge probability p = c2/n must lie in [0, 1]");
}

double deviation_ratio(std::size_t edges, double expected) {
  const double diff = std::fabs(static_cast<double>(edges) - expected);
  if (expected == 0) return diff == 0 ? 0 : std::numeric_limits<double>::infinity();
  return diff / expected;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const auto next = r * static_cast<std::uint64_t>(n - k + i);
    if (next / static_cast<std::uint64_t>(n - k + i) != r) return std::numeric_limits<std::uint64_t>::max();
    r = next / static_cast<std::uint64_t>(i);
  }
  return r;
}

struct Scan {
  const BipartiteMasks& bm;
  double p;
  double worst = -1;
  Mask worst_u = 0;
  Mask worst_w = 0;
  std::size_t worst_edges = 0;
  std::uint64_t pairs = 0;

  // For a fixed U, the W of each size w maximizing |e(U,W) - p u w| takes
  // the w largest or the w smallest per-vertex counts into U.
  void visit(Mask u_mask, int min_w, int max_w) {
    const int u = detail::popcount(u_mask);
    const int n1 = bm.size(1);
    std::vector<std::pair<int, int>> counts(static_cast<std::size_t>(n1));
    for (int j = 0; j < n1; ++j) counts[j] = {detail::popcount(bm.nbr[1][j] & u_mask), j};
    std::stable_sort(counts.begin(), counts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t low = 0, high = 0;
    Mask low_mask = 0, high_mask = 0;
    for (int w = 1; w <= max_w; ++w) {
      low += static_cast<std::size_t>(counts[w - 1].first);
      low_mask |= Mask{1} << counts[w - 1].second;
      high += static_cast<std::size_t>(counts[n1 - w].first);
      high_mask |= Mask{1} << counts[n1 - w].second;
      if (w < min_w) continue;
      pairs += binomial(n1, w);
      const double expected = p * u * w;
      consider(u_mask, high_mask, high, expected);
      consider(u_mask, low_mask, low, expected);
    }
  }

  void consider(Mask u_mask, Mask w_mask, std::size_t edges, double expected) {
    const double r = deviation_ratio(edges, expected);
    if (r > worst) {
      worst = r;
      worst_u = u_mask;
      worst_w = w_mask;
      worst_edges = edges;
    }
  }
};

// Lexicographic k-subsets of 0..n-1 as masks.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    fn(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string to_string(Model model) { return model == Model::bipartite ? "bipartite" : "graph"; }

std::string to_string(DensityMode mode) {
  switch (mode) {
    case DensityMode::min_size:
      return "exhaustive-min-size";
    case DensityMode::all_sizes:
      return "exhaustive-all-sizes";
    case DensityMode::sampled:
      return "sampled";
  }
  return "?";
}

Validity check_validity(const ParamSet& params, Model model) {
  Validity v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  if (params.c1 < 1) fail("c1 must be a positive integer");
  if (params.c2 <= 0) fail("c2 must be positive");
  if (params.c3 <= 0) fail("c3 must be positive");
  if (params.n < 1) fail("n must be positive");
  if (model == Model::bipartite) {
    if (params.c3 > static_cast<double>(params.c1)) fail("c3 <= c1 fails");
    if (!(params.eps > 0 && params.eps <= 0.5)) fail("0 < eps <= 1/2 fails");
  } else {
    if (2 * params.c3 > static_cast<double>(params.c1)) fail("2 c3 <= c1 fails");
    if (!(params.eps > 0 && params.eps < 1)) fail("0 < eps < 1 fails");
  }
  if (params.delta > 1.5) fail("delta <= 3/2 fails");
  if (params.c1 >= 1 && params.c2 > 0 && params.c3 > 0 &&
      static_cast<double>(params.c1) * M_E / params.c3 >= 1) {
    const double threshold = delta_threshold(static_cast<double>(params.c1), params.c2, params.c3);
    if (!(params.delta > threshold)) fail("delta > sqrt(6 ln(c1 e/c3)/(c2 c3)) fails");
  }
  if (params.n >= 1 && params.p() > 1) fail("p = c2/n exceeds 1");
  return v;
}

double chernoff_bound(double mu, double delta) {
  if (!(mu > 0)) throw DomainError("chernoff_bound needs mu > 0");
  if (!(delta > 0 && delta <= 1.5)) throw DomainError("chernoff_bound needs delta in (0, 3/2]");
  return 2 * std::exp(-delta * delta * mu / 3);
}

double binomial_two_sided_tail(int n, double p, double threshold) {
  if (n < 0 || p < 0 || p > 1) throw DomainError("binomial tail needs n >= 0 and p in [0, 1]");
  const double mu = n * p;
  double tail = 0;
  // pmf by the multiplicative recurrence P(k+1) = P(k) (n-k)/(k+1) p/(1-p).
  if (p == 0 || p == 1) return std::fabs((p == 1 ? n : 0) - mu) > threshold ? 1.0 : 0.0;
  double pmf = std::pow(1 - p, n);
  for (int k = 0; k <= n; ++k) {
    if (std::fabs(k - mu) > threshold) tail += pmf;
    pmf *= static_cast<double>(n - k) / (k + 1) * p / (1 - p);
  }
  return tail;
}

double delta_threshold(double c1, double c2, double c3) {
  if (!(c1 > 0 && c2 > 0 && c3 > 0)) throw DomainError("delta_threshold needs c1, c2, c3 > 0");
  const double arg = std::log(c1 * M_E / c3);
  if (arg < 0) throw DomainError("delta_threshold needs c1 e / c3 >= 1");
  return std::sqrt(6 * arg / (c2 * c3));
}

double h_function(double x, double y, double c1, double c2, double delta) {
  if (!(x > 0 && y > 0)) throw DomainError("h(x, y) needs x, y > 0");
  return x * std::log(c1 * M_E / x) + y * std::log(c1 * M_E / y) -
         delta * delta / 3 * c2 * x * y;
}

std::array<double, 2> h_gradient(double x, double y, double c1, double c2, double delta) {
  if (!(x > 0 && y > 0)) throw DomainError("h(x, y) needs x, y > 0");
  const double k = delta * delta / 3 * c2;
  return {std::log(c1 / x) - k * y, std::log(c1 / y) - k * x};
}

Graph sample_bipartite(const ParamSet& params, std::uint64_t seed) {
  require_probability(params);
  const long big_n = params.N();
  if (big_n > (1L << 20)) throw InvalidInput("N too large for an explicit G(N, N, p)");
  const double p = params.p();
  const CounterRng rng(seed);
  std::vector<Edge> edges;
  for (long i = 0; i < big_n; ++i) {
    for (long j = 0; j < big_n; ++j) {
      if (rng.unit_at(static_cast<std::uint64_t>(i * big_n + j)) < p) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(big_n + j)});
      }
    }
  }
  return Graph::bipartite(static_cast<int>(big_n), static_cast<int>(big_n), edges);
}

Graph sample_graph(const ParamSet& params, std::uint64_t seed) {
  require_probability(params);
  const long big_n = params.N();
  if (big_n > (1L << 20)) throw InvalidInput("N too large for an explicit G(N, p)");
  const double p = params.p();
  const CounterRng rng(seed);
  std::vector<Edge> edges;
  std::uint64_t counter = 0;
  for (long i = 0; i < big_n; ++i) {
    for (long j = i + 1; j < big_n; ++j) {
      if (rng.unit_at(counter++) < p) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph::from_edges(static_cast<int>(big_n), edges);
}

EdgeWindow edge_count_window(const ParamSet& params, Model model) {
  const double big_n = static_cast<double>(params.N());
  if (model == Model::bipartite) {
    const double slack = std::pow(static_cast<double>(params.n), params.eps - 0.5);
    const double mean = params.p() * big_n * big_n;
    return {(1 - slack) * mean, (1 + slack) * mean};
  }
  const double mean = static_cast<double>(params.c1) * params.c2 * (big_n - 1) / 2;
  return {(1 - params.eps) * mean, (1 + params.eps) * mean};
}

DensityReport verify_density(const Graph& g, const ParamSet& params, Model model,
                             const DensityOptions& options) {
  DensityReport report;
  report.model = model;
  report.params = params;
  report.mode = options.mode;
  report.seed = options.mode == DensityMode::sampled ? options.seed : 0;
  report.total_edges = g.edge_count();
  report.window = edge_count_window(params, model);
  report.edge_count_ok = report.window.lower <= static_cast<double>(g.edge_count()) &&
                         static_cast<double>(g.edge_count()) <= report.window.upper;
  report.validity = check_validity(params, model);

  std::array<std::vector<Vertex>, 2> sides;
  if (options.sides) {
    require_valid(g, (*options.sides)[0]);
    require_valid(g, (*options.sides)[1]);
    for (Vertex v : (*options.sides)[0]) {
      if ((*options.sides)[1].contains(v)) throw InvalidInput("density sides must be disjoint");
    }
    for (int i = 0; i < 2; ++i) {
      sides[i].assign((*options.sides)[i].begin(), (*options.sides)[i].end());
    }
  } else if (g.is_labeled()) {
    sides = {g.part_members(0), g.part_members(1)};
  } else {
    throw NotBipartite("verify_density needs a labeled graph or two explicit sides");
  }

  const int k = static_cast<int>(ceil_tolerant(params.c3 * static_cast<double>(params.n)));
  report.min_size = k;
  if (k < 1) throw InvalidInput("threshold size ceil(c3 n) must be at least 1");
  if (k > static_cast<int>(sides[0].size()) || k > static_cast<int>(sides[1].size())) {
    throw InvalidInput("threshold size ceil(c3 n) = " + std::to_string(k) + " exceeds a side");
  }
  const double p = params.p();

  if (options.mode == DensityMode::sampled) {
    CounterRng rng(options.seed);
    for (std::uint64_t t = 0; t < options.budget; ++t) {
      std::vector<Vertex> u, w;
      for (int i : rng.sample(static_cast<int>(sides[0].size()), k)) u.push_back(sides[0][i]);
      for (int i : rng.sample(static_cast<int>(sides[1].size()), k)) w.push_back(sides[1][i]);
      DensityPair pair{VertexSet(u), VertexSet(w), 0, 0};
      pair.edges = edges_between(g, pair.u, pair.w);
      pair.ratio = deviation_ratio(pair.edges, p * k * k);
      if (!report.worst_pair || pair.ratio > report.worst_pair->ratio) report.worst_pair = pair;
      ++report.pairs_checked;
    }
  } else {
    const auto bm = BipartiteMasks::build(g, sides);
    const int n0 = bm.size(0), n1 = bm.size(1);
    Scan scan{bm, p};
    if (options.mode == DensityMode::min_size) {
      if (binomial(n0, k) > options.enumeration_cap) {
        throw CapExceeded("C(" + std::to_string(n0) + ", " + std::to_string(k) +
                          ") subsets exceed the enumeration cap");
      }
      for_each_subset(n0, k, [&](Mask u) { scan.visit(u, k, k); });
    } else {
      if (n0 > options.all_sizes_part_cap || n1 > options.all_sizes_part_cap) {
        throw CapExceeded("all-sizes density check is limited to sides of " +
                          std::to_string(options.all_sizes_part_cap) + " vertices");
      }
      for (int u = k; u <= n0; ++u) for_each_subset(n0, u, [&](Mask m) { scan.visit(m, k, n1); });
    }
    report.pairs_checked = scan.pairs;
    report.worst_pair = DensityPair{VertexSet(bm.to_vertices(0, scan.worst_u)),
                                    VertexSet(bm.to_vertices(1, scan.worst_w)), scan.worst_edges,
                                    scan.worst};
  }
  report.property2_ok = report.worst_pair && report.worst_pair->ratio <= params.delta;
  return report;
}

}  // namespace cycram
