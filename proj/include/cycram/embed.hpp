#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycram/expander.hpp"
#include "cycram/gadgets.hpp"
#include "cycram/graph.hpp"

namespace cycram {

struct PlantedTree {
  Vertex root_image = 0;  // host vertex the tree root is pinned to
  RootedTree tree;
};

/// Forest to embed with prescribed roots, and the bounds of the forest
/// embedding theorem: sum of tree sizes <= M, tree degrees <= delta.
struct EmbedSpec {
  Graph host;
  std::vector<PlantedTree> trees;
  int delta = 3;
  long M = 0;
  long m = 1;
};

/// Spec with delta and M set to the forest's actual maximum degree and size.
EmbedSpec make_embed_spec(Graph host, std::vector<PlantedTree> trees, long m);

/// InvalidInput unless roots are distinct host vertices, sum |T| <= M and
/// every tree has maximum degree <= delta.
void require_valid(const EmbedSpec& spec);

/// image[t][v] = host vertex of vertex v of tree t; -1 when unassigned.
struct Embedding {
  std::vector<std::vector<Vertex>> image;
};

struct EmbedResult {
  bool success = false;
  Embedding embedding;  // complete on success, deepest partial assignment otherwise
  bool budget_exhausted = false;  // false on failure means no embedding exists
  std::optional<std::array<int, 2>> blocking;  // (tree, vertex) with no candidate at the deepest point
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
};

/// Backtracking leaf extension. Tree vertices are placed in order of
/// (depth, tree, id); each goes to an unused host neighbor of its parent's
/// image, preferring the most unused neighbors, then the lowest id. `budget`
/// bounds the number of placements tried.
EmbedResult embed_forest(const EmbedSpec& spec, std::uint64_t budget = 1'000'000);

struct EmbedCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Injectivity, edge preservation and root pinning, edge by edge.
EmbedCheck validate_embedding(const Graph& host, const std::vector<PlantedTree>& trees,
                              const Embedding& embedding);

struct SetViolation {
  int condition = 0;  // 1 or 2
  int part = 0;
  VertexSet set;
  long lhs = 0;
  long rhs = 0;
};

struct PreconditionReport {
  bool condition1 = false;
  bool condition2 = false;
  bool complete = true;  // false when the set cap stopped the scan
  std::optional<SetViolation> violation;
  std::uint64_t sets_examined = 0;

  bool passed() const { return condition1 && condition2 && complete; }
};

/// Forest conditions on a labeled bipartite host, over every S inside one part:
/// (1) |S| <= m: |N(S) \ X| >= 2 delta |S \ X| + sum over S ∩ X of (d_root + delta);
/// (2) m <= |S| <= 2m: |N(S)| >= M + 8 delta m.
PreconditionReport check_forest_preconditions(const EmbedSpec& spec,
                                              std::uint64_t cap = 50'000'000);

struct TreeEmbedSpec {
  Graph host;
  int D = 3;
  std::array<long, 2> m{1, 1};
  std::array<long, 2> M{0, 0};
};

/// Tree conditions: X ⊆ V_i with 0 < |X| <= m_i needs |N(X)| >= D|X| + 1, and
/// m_i < |X| <= 2 m_i needs |N(X)| >= D|X| + M_{1-i}.
PreconditionReport check_tree_preconditions(const TreeEmbedSpec& spec,
                                            std::uint64_t cap = 50'000'000);

struct InequalityCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;  // lhs >= rhs up to 1e-12 relative slack, or the stated strict form
};

/// Even pipeline: 0 < alpha < 0.1 and N >= (n + 4) / (2 - 20 alpha).
std::vector<InequalityCheck> even_cycle_hypotheses(double alpha, long big_n, long n);
/// (1 - 2 alpha)/(2 alpha) >= 3 and (1 - 2 alpha) N >= 6 alpha N + M_i with
/// M_i = 2 ceil(alpha N) + n/2.
std::vector<InequalityCheck> even_cycle_sufficient(double alpha, long big_n, long n);
/// Odd pipeline: 0 < alpha <= 0.033 and N >= (n + 28) / (1 - 30 alpha).
std::vector<InequalityCheck> odd_cycle_hypotheses(double alpha, long big_n, long n);
/// (1 - 2 alpha)/(2 alpha) >= 8 and (1 - 2 alpha) N >= 28 ceil(alpha N) + n.
std::vector<InequalityCheck> odd_cycle_sufficient(double alpha, long big_n, long n);

bool all_hold(const std::vector<InequalityCheck>& checks);

/// n distinct vertices, consecutive ones adjacent, last adjacent to first.
bool is_cycle_of_length(const Graph& g, const std::vector<Vertex>& cycle, int n);

struct PipelineOptions {
  bool relaxed = false;  // run outside the lemma hypotheses, labeled out-of-hypothesis
  JoinedOptions joined;
  ExtractOptions extract;
  std::uint64_t embed_budget = 1'000'000;
  int root_attempts = 16;  // root images tried by the even pipeline
  int pair_budget = 64;    // ordered root pairs tried by the odd pipeline
};

enum class EvenStatus { cycle, not_joined, gadget_infeasible, embedding_failed, no_crossing_edge };

struct EvenCycleResult {
  EvenStatus status = EvenStatus::embedding_failed;
  std::vector<Vertex> cycle;
  std::optional<JoinedWitness> witness;  // not_joined and no_crossing_edge
  JoinedResult joined;
  std::optional<ExtractionLog> extraction;
  std::optional<EmbedResult> last_embedding;
  std::vector<InequalityCheck> hypotheses;
  std::vector<InequalityCheck> sufficient;
  bool out_of_hypothesis = false;
  int leaves = 0;
  int roots_tried = 0;
  std::string detail;
};

/// Expander extraction, even gadget embedding and a crossing leaf edge closing
/// the n - 1 tree path. Without `relaxed`, InfeasibleParameters when the
/// hypotheses fail.
EvenCycleResult find_even_cycle(const Graph& g, int n, double alpha,
                                const PipelineOptions& options = {});

enum class OddStatus { cycle, case_one, case_two, inconclusive, gadget_infeasible };

struct OddCycleResult {
  OddStatus status = OddStatus::inconclusive;
  std::vector<Vertex> cycle;
  std::optional<JoinedWitness> case_one;          // a ⊆ v0, b ⊆ v1, no edge between
  std::optional<std::array<VertexSet, 2>> case_two;  // independent in g
  JoinedResult joined;
  std::optional<ExtractionLog> extraction;  // ids of g
  std::vector<InequalityCheck> hypotheses;
  std::vector<InequalityCheck> sufficient;
  bool out_of_hypothesis = false;
  int leaves = 0;
  int pairs_tried = 0;
  int embeddings_found = 0;
  std::string detail;
};

/// Odd-cycle alternative on two disjoint equal-size sets of g: a cycle of
/// length n, sets of size >= alpha N with no cross edge, or large independent
/// sets. Root pairs are the g-edges inside a survivor set, in lexicographic
/// order, both orientations.
OddCycleResult find_odd_cycle_or_structure(const Graph& g, const VertexSet& v0,
                                           const VertexSet& v1, int n, double alpha,
                                           const PipelineOptions& options = {});

std::string to_string(EvenStatus status);
std::string to_string(OddStatus status);

}  // namespace cycram
