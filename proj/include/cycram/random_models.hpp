#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

enum class Model { bipartite, graph };

/// Constant bundle of the quasi-random lemmas: N = c1 * n, p = c2 / n.
struct ParamSet {
  long c1 = 1;
  double c2 = 1;
  double c3 = 1;
  double eps = 0.25;
  double delta = 1;
  long n = 1;

  long N() const { return c1 * n; }
  double p() const { return c2 / static_cast<double>(n); }
};

/// Hypothesis check of the quasi-random lemma for a model. Samplers do not
/// require validity; reports carry it so toy runs stay labeled.
struct Validity {
  bool ok = true;
  std::vector<std::string> violations;
};

Validity check_validity(const ParamSet& params, Model model);

/// 2 exp(-delta^2 mu / 3); DomainError unless mu > 0 and delta in (0, 3/2].
double chernoff_bound(double mu, double delta);

/// P(|X - n p| > threshold) for X ~ Bin(n, p), summed exactly.
double binomial_two_sided_tail(int n, double p, double threshold);

/// sqrt(6 ln(c1 e / c3) / (c2 c3)); DomainError unless c1, c2, c3 > 0 and c1 e / c3 >= 1.
double delta_threshold(double c1, double c2, double c3);

/// x ln(c1 e / x) + y ln(c1 e / y) - (delta^2 / 3) c2 x y for x, y > 0.
double h_function(double x, double y, double c1, double c2, double delta);
/// Analytic partials (dh/dx, dh/dy) = (ln(c1/x) - delta^2 c2 y / 3, ln(c1/y) - delta^2 c2 x / 3).
std::array<double, 2> h_gradient(double x, double y, double c1, double c2, double delta);

/// Bipartite G(N, N, p): pair (i, j) of part 0 x part 1 is drawn at counter i * N + j.
Graph sample_bipartite(const ParamSet& params, std::uint64_t seed);
/// G(N, p): pairs i < j drawn at consecutive counters in lexicographic order.
Graph sample_graph(const ParamSet& params, std::uint64_t seed);

/// Property-1 edge-count window: (1 ± n^(eps - 1/2)) p N^2 for the bipartite
/// model, (1 ± eps) c1 c2 (c1 n - 1) / 2 for the graph model.
struct EdgeWindow {
  double lower = 0;
  double upper = 0;
};
EdgeWindow edge_count_window(const ParamSet& params, Model model);

enum class DensityMode { min_size, all_sizes, sampled };

struct DensityOptions {
  DensityMode mode = DensityMode::min_size;
  std::uint64_t budget = 10000;  // pairs drawn in sampled mode
  std::uint64_t seed = 0;        // sampled mode only
  /// Sides (U ranges over sides[0], W over sides[1]); required for unlabeled graphs.
  std::optional<std::array<VertexSet, 2>> sides;
  /// Largest number of U subsets an exhaustive mode may enumerate.
  std::uint64_t enumeration_cap = 20'000'000;
  /// all_sizes mode is limited to sides of at most this many vertices.
  int all_sizes_part_cap = 16;
};

struct DensityPair {
  VertexSet u;
  VertexSet w;
  std::size_t edges = 0;
  double ratio = 0;  // |e(U,W) - p|U||W|| / (p|U||W|)
};

struct DensityReport {
  Model model = Model::bipartite;
  ParamSet params;
  DensityMode mode = DensityMode::min_size;
  std::uint64_t seed = 0;
  std::size_t total_edges = 0;
  EdgeWindow window;
  bool edge_count_ok = false;
  int min_size = 0;  // ceil(c3 n)
  std::uint64_t pairs_checked = 0;
  std::optional<DensityPair> worst_pair;
  bool property2_ok = false;
  Validity validity;
};

/// Checks the local-density property |e(U,W) - p u w| <= delta p u w over
/// pairs of sets of size >= ceil(c3 n). min_size enumerates every pair at
/// exactly that size, all_sizes every pair of sizes >= it, sampled draws
/// `budget` random min-size pairs. InvalidInput if ceil(c3 n) exceeds a side.
DensityReport verify_density(const Graph& g, const ParamSet& params, Model model,
                             const DensityOptions& options = {});

std::string to_string(Model model);
std::string to_string(DensityMode mode);

}  // namespace cycram
