#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/edge_coloring.hpp"
#include "cycram/embed.hpp"
#include "cycram/graph.hpp"

namespace cycram {

/// Exact search for a cycle of length n (n >= 3). Each cycle is found from its
/// smallest vertex; paths are pruned by distance back to the start. CapExceeded
/// when g has more than vertex_cap vertices (vertex_cap <= 0 disables the cap).
std::optional<std::vector<Vertex>> find_cycle_exact(const Graph& g, int n, int vertex_cap = 256);

/// Simple u-v path with exactly `length` edges, avoiding the edge uv itself.
std::optional<std::vector<Vertex>> find_path_of_length(const Graph& g, Vertex u, Vertex v,
                                                       int length);

struct CnFreeResult {
  long lower = 0;
  long upper = 0;
  bool exact = false;
  std::vector<Edge> witness;  // C_n-free spanning subgraph with `lower` edges
  std::uint64_t nodes = 0;
};

/// Largest C_n-free spanning subgraph. Exact by branch-and-bound when
/// e(g) <= edge_cap (or g has no C_n at all); otherwise an interval whose lower
/// end is a greedy C_n-free subgraph and upper end subtracts edge-disjoint C_n copies.
CnFreeResult max_cnfree_edges(const Graph& g, int n, int edge_cap = 20);

struct ArrowVerdict {
  bool holds = false;
  std::optional<EdgeColoring> witness;  // coloring without a monochromatic C_n when !holds
  std::uint64_t colorings_examined = 0;  // search nodes
  std::string symmetry = "colors introduced in increasing order";
};

/// Exact test of g -> (C_n)_r over all r-colorings up to color permutation.
/// CapExceeded when e(g) > edge_cap or the search passes node_cap nodes.
ArrowVerdict arrow_check(const Graph& g, int n, int r, int edge_cap = 24,
                         std::uint64_t node_cap = 200'000'000);

struct GammaVerdict {
  bool holds = false;
  CnFreeResult max_free;
  double threshold = 0;  // e(g) / r
};

/// g ->_{1/r} C_n, i.e. every subgraph with >= e(g)/r edges contains C_n:
/// holds iff the largest C_n-free subgraph has fewer than e(g)/r edges.
/// CapExceeded when the interval answer leaves it undecided.
GammaVerdict gamma_arrow_check(const Graph& g, int n, int r, int edge_cap = 20);

struct AdversarialColoring {
  EdgeColoring coloring;
  bool guaranteed = false;     // e(h) <= 2^(r-1) (n-1)
  double threshold = 0;        // 2^(r-1) (n-1)
  double lower_bound_leading_term = 0;  // 3.75 * 2^(r-2) * n
};

/// Colors r, r-1, ..., 2 each take a bipartite split of the remaining edges;
/// color 1 takes the residue. InvalidInput for even n or r < 1.
AdversarialColoring adversarial_color_odd(const Graph& h, int n, int r);

/// 3.75 * 2^(r-2) * n, the leading constant of the lower bound.
double lower_bound_value(long n, int r);
/// 2^(r-1) (n - 1), the edge count below which adversarial_color_odd is guaranteed.
double constructive_threshold(long n, int r);
inline constexpr const char* kLowerBoundCaveat =
    "leading constant only; the bound holds up to a (1 - o(1)) factor as n grows";

struct PeelingOptions {
  PipelineOptions pipeline;
  std::optional<std::uint64_t> halves_seed;  // random disjoint halves instead of the id split
};

enum class PeelingStatus { monochromatic_cycle, case_one, case_two, inconclusive };

struct PeelingStep {
  int color = 0;
  int size_before = 0;
  OddStatus status = OddStatus::inconclusive;
  int size_after = 0;
  bool out_of_hypothesis = false;
  std::string detail;
};

struct PeelingOutcome {
  PeelingStatus status = PeelingStatus::inconclusive;
  std::vector<PeelingStep> steps;
  std::vector<Vertex> cycle;       // monochromatic_cycle
  int color = 0;                   // color of the cycle, or the color missing in case_two
  std::array<VertexSet, 2> sets;   // case_one: no h-edge between; case_two: no `color` edge inside
  bool verified = false;           // certificate re-checked by direct edge scans
  bool out_of_hypothesis = false;
};

/// One level of the multicolor procedure: starting from two disjoint halves of
/// size floor(N'/2), apply the odd-cycle alternative to color i on the current
/// pair for i = 1..r, shrinking on Case I and stopping on a cycle or Case II.
PeelingOutcome run_peeling(const Graph& h, const EdgeColoring& coloring, int n, double alpha,
                           const PeelingOptions& options = {});

std::string to_string(PeelingStatus status);

}  // namespace cycram
