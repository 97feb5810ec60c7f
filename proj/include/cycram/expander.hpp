#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/graph.hpp"

namespace cycram {

/// Pair of opposite-part sets of boundary size ceil(alpha N) with no edge
/// between them; refutes alpha-joinedness.
struct JoinedWitness {
  VertexSet a;  // part 0
  VertexSet b;  // part 1
};

enum class JoinedVerdict { joined, not_joined, probably_joined };

enum class SearchMode {
  exhaustive,  // exact; CapExceeded beyond the cap
  sampled,     // refutation heuristic
  automatic,   // exhaustive, falling back to sampled when the cap is hit
};

struct JoinedOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t budget = 20000;    // random sets drawn in sampled mode
  std::uint64_t seed = 0;
  std::uint64_t node_cap = 50'000'000;  // search nodes allowed in exhaustive mode
};

struct JoinedResult {
  JoinedVerdict verdict = JoinedVerdict::joined;
  std::optional<JoinedWitness> witness;
  int boundary_size = 0;
  std::uint64_t nodes = 0;
  SearchMode mode_used = SearchMode::exhaustive;
};

/// Decides whether every A ⊆ V0, B ⊆ V1 with |A|, |B| >= alpha N spans an
/// edge. Having no edges is closed under taking subsets, so only pairs of
/// size exactly ceil(alpha N) are searched. NotBipartite for unlabeled
/// input, InvalidInput for unequal parts.
JoinedResult is_alpha_joined(const Graph& g, double alpha, const JoinedOptions& options = {});

enum class ExtractStrategy {
  exhaustive,  // lexicographically first deletable set of each size
  greedy,      // single vertices only; may miss multi-vertex deletable sets
  automatic,   // exhaustive while both parts fit in 64 bits and the cap holds
};

struct ExtractOptions {
  ExtractStrategy strategy = ExtractStrategy::exhaustive;
  std::uint64_t node_cap = 50'000'000;  // per scan in exhaustive mode
};

struct DeletedSet {
  int part = 0;
  VertexSet set;            // ids of the input graph
  int neighborhood_size = 0;  // |N(U)| in the graph current at deletion
};

struct ExtractionLog {
  std::vector<DeletedSet> deleted;
  std::array<VertexSet, 2> survivors;
  std::array<int, 2> deleted_per_part{0, 0};
  bool claim1_holds = true;  // each part lost at most alpha N vertices
  ExtractStrategy strategy_used = ExtractStrategy::exhaustive;
};

struct Extraction {
  Graph expander;                  // induced on the survivors, labels kept
  std::vector<Vertex> original;    // expander id -> input id
  ExtractionLog log;
};

/// Repeatedly deletes a set U inside one part with |U| <= alpha N and
/// |N(U)| <= ((1 - 2 alpha)/(2 alpha)) |U| until none remains.
Extraction extract_expander(const Graph& g, double alpha, const ExtractOptions& options = {});

struct ExpansionViolation {
  int conclusion = 0;  // 1, 2 or 3
  int part = 0;
  VertexSet set;       // ids of the checked graph
  double lhs = 0;
  double rhs = 0;
};

struct ExpansionReport {
  bool conclusion1 = false;  // both parts have >= (1 - alpha) N vertices
  bool conclusion2 = false;  // small sets expand by (1 - 2 alpha)/(2 alpha)
  bool conclusion3 = false;  // sets above alpha N reach (1 - 2 alpha) N
  bool complete = true;      // false when the node cap stopped the search
  /// Conclusion 3 was checked at the minimal size only and extended by monotonicity.
  bool monotonicity_extended = false;
  std::optional<ExpansionViolation> violation;
  std::uint64_t nodes = 0;

  bool passed() const { return conclusion1 && conclusion2 && conclusion3 && complete; }
};

/// Verifies the three expander conclusions on a labeled bipartite graph.
/// Conclusion 3 is checked at size floor(alpha N) + 1 only: |N(U)| is
/// monotone in U, so every larger set contains a checked one.
ExpansionReport verify_expansion(const Graph& g, double alpha, int big_n,
                                 std::uint64_t node_cap = 50'000'000);

std::string to_string(JoinedVerdict verdict);
std::string to_string(SearchMode mode);
std::string to_string(ExtractStrategy strategy);

}  // namespace cycram
