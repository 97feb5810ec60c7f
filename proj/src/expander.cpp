#include "cycram/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "cycram/errors.hpp"
#include "cycram/numeric.hpp"
#include "cycram/rng.hpp"
#include "detail/bipartite_masks.hpp"

namespace cycram {

namespace {

using detail::BipartiteMasks;
using detail::Mask;
using detail::popcount;

struct NodeCapHit {};

int require_equal_parts(const Graph& g, double alpha, const char* op) {
  if (!g.is_labeled()) throw NotBipartite(std::string(op) + ": graph carries no part labels");
  if (!(alpha > 0 && alpha < 1)) {
    throw InvalidInput(std::string(op) + ": alpha must lie in (0, 1)");
  }
  const auto n0 = g.part_members(0).size();
  const auto n1 = g.part_members(1).size();
  if (n0 != n1) {
    throw InvalidInput(std::string(op) + ": parts have unequal sizes " + std::to_string(n0) +
                       " and " + std::to_string(n1));
  }
  return static_cast<int>(n0);
}

double expansion_ratio(double alpha) { return (1 - 2 * alpha) / (2 * alpha); }

// Lexicographically first U ⊆ pool (ascending local index) with |U| = size and
// |N(U) ∩ other| <= limit. Neighborhoods only grow, so a prefix over the limit
// is pruned.
class SmallNeighborhoodSearch {
 public:
  SmallNeighborhoodSearch(const BipartiteMasks& bm, int side, Mask other, std::uint64_t cap,
                          std::uint64_t& nodes)
      : bm_(bm), side_(side), other_(other), cap_(cap), nodes_(nodes) {}

  std::optional<Mask> find(Mask pool, int size, long limit) {
    size_ = size;
    limit_ = limit;
    pool_ = pool;
    found_.reset();
    dfs(0, 0, 0, 0);
    return found_;
  }

 private:
  bool dfs(int from, int chosen, Mask set, Mask nbr) {
    if (++nodes_ > cap_) throw NodeCapHit{};
    if (popcount(nbr & other_) > limit_) return false;
    if (chosen == size_) {
      found_ = set;
      return true;
    }
    const int need = size_ - chosen;
    for (int v = from; v < bm_.size(side_); ++v) {
      const Mask bit = Mask{1} << v;
      if (!(pool_ & bit)) continue;
      if (popcount(pool_ & ~detail::low_bits(v)) < need) return false;
      if (dfs(v + 1, chosen + 1, set | bit, nbr | bm_.nbr[side_][v])) return true;
    }
    return false;
  }

  const BipartiteMasks& bm_;
  int side_;
  Mask other_;
  std::uint64_t cap_;
  std::uint64_t& nodes_;
  Mask pool_ = 0;
  int size_ = 0;
  long limit_ = 0;
  std::optional<Mask> found_;
};

VertexSet mask_to_set(const BipartiteMasks& bm, int side, Mask m) {
  return VertexSet(bm.to_vertices(side, m));
}

// Exhaustive joined search: A grows in lexicographic order; once fewer than k
// vertices of part 1 avoid N(A), no extension can succeed.
std::optional<JoinedWitness> joined_exhaustive(const BipartiteMasks& bm, int k,
                                               std::uint64_t cap, std::uint64_t& nodes) {
  const int n1 = bm.size(1);
  const Mask all1 = detail::low_bits(n1);
  std::optional<JoinedWitness> witness;
  auto dfs = [&](auto&& self, int from, int chosen, Mask a, Mask nbr) -> bool {
    if (++nodes > cap) throw NodeCapHit{};
    const Mask free = all1 & ~nbr;
    if (popcount(free) < k) return false;
    if (chosen == k) {
      Mask b = 0;
      Mask rest = free;
      for (int i = 0; i < k; ++i) {
        b |= rest & (~rest + 1);
        rest &= rest - 1;
      }
      witness = JoinedWitness{mask_to_set(bm, 0, a), mask_to_set(bm, 1, b)};
      return true;
    }
    for (int v = from; v <= bm.size(0) - (k - chosen); ++v) {
      if (self(self, v + 1, chosen + 1, a | (Mask{1} << v), nbr | bm.nbr[0][v])) return true;
    }
    return false;
  };
  dfs(dfs, 0, 0, 0, 0);
  return witness;
}

std::optional<JoinedWitness> joined_sampled(const Graph& g, int k, std::uint64_t budget,
                                            std::uint64_t seed, std::uint64_t& nodes) {
  const auto v0 = g.part_members(0);
  const auto v1 = g.part_members(1);
  const int n = static_cast<int>(v0.size());
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(g.vertex_count()), 0);
  CounterRng rng(seed);
  for (std::uint64_t draw = 0; draw < budget; ++draw) {
    ++nodes;
    std::vector<Vertex> a;
    for (int idx : rng.sample(n, k)) a.push_back(v0[idx]);
    for (Vertex x : a) {
      for (Vertex y : g.neighbors(x)) hit[y] = 1;
    }
    std::vector<Vertex> b;
    for (Vertex y : v1) {
      if (!hit[y] && static_cast<int>(b.size()) < k) b.push_back(y);
    }
    for (Vertex x : a) {
      for (Vertex y : g.neighbors(x)) hit[y] = 0;
    }
    if (static_cast<int>(b.size()) == k) {
      return JoinedWitness{VertexSet(std::move(a)), VertexSet(std::move(b))};
    }
  }
  return std::nullopt;
}

}  // namespace

JoinedResult is_alpha_joined(const Graph& g, double alpha, const JoinedOptions& options) {
  const int n = require_equal_parts(g, alpha, "is_alpha_joined");
  JoinedResult result;
  result.boundary_size = static_cast<int>(ceil_tolerant(alpha * n));
  const int k = result.boundary_size;
  if (k < 1) throw InvalidInput("is_alpha_joined: ceil(alpha N) must be at least 1");

  auto run_sampled = [&] {
    result.mode_used = SearchMode::sampled;
    result.witness = joined_sampled(g, k, options.budget, options.seed, result.nodes);
    result.verdict = result.witness ? JoinedVerdict::not_joined : JoinedVerdict::probably_joined;
  };

  if (options.mode == SearchMode::sampled) {
    run_sampled();
    return result;
  }
  try {
    const auto bm = BipartiteMasks::from_labels(g);
    result.mode_used = SearchMode::exhaustive;
    result.witness = joined_exhaustive(bm, k, options.node_cap, result.nodes);
    result.verdict = result.witness ? JoinedVerdict::not_joined : JoinedVerdict::joined;
  } catch (const CapExceeded&) {
    if (options.mode == SearchMode::exhaustive) throw;
    result.nodes = 0;
    run_sampled();
  } catch (const NodeCapHit&) {
    if (options.mode == SearchMode::exhaustive) {
      throw CapExceeded("is_alpha_joined: exhaustive search exceeded " +
                        std::to_string(options.node_cap) + " nodes");
    }
    result.nodes = 0;
    run_sampled();
  }
  return result;
}

namespace {

// One single-vertex greedy step: among alive vertices failing the
// single-vertex expansion test, the one of least alive degree (lowest id on ties).
std::optional<Vertex> greedy_pick(const Graph& g, const std::vector<std::uint8_t>& alive,
                                  long limit) {
  std::optional<Vertex> best;
  int best_deg = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!alive[v]) continue;
    int deg = 0;
    for (Vertex y : g.neighbors(v)) deg += alive[y];
    if (deg <= limit && (!best || deg < best_deg)) {
      best = v;
      best_deg = deg;
    }
  }
  return best;
}

}  // namespace

Extraction extract_expander(const Graph& g, double alpha, const ExtractOptions& options) {
  const int n = require_equal_parts(g, alpha, "extract_expander");
  const double rho = expansion_ratio(alpha);
  const int max_size = static_cast<int>(std::min<long>(floor_tolerant(alpha * n), n));

  std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.vertex_count()), 1);
  ExtractionLog log;

  auto record = [&](int part, std::vector<Vertex> members) {
    int nb = 0;
    std::vector<std::uint8_t> seen(alive.size(), 0);
    for (Vertex x : members) {
      for (Vertex y : g.neighbors(x)) {
        if (alive[y] && !seen[y]) {
          seen[y] = 1;
          ++nb;
        }
      }
    }
    for (Vertex x : members) alive[x] = 0;
    log.deleted_per_part[part] += static_cast<int>(members.size());
    log.deleted.push_back({part, VertexSet(std::move(members)), nb});
  };

  auto run_greedy = [&] {
    log.strategy_used = ExtractStrategy::greedy;
    if (max_size < 1) return;
    const long limit = floor_tolerant(rho);
    while (auto v = greedy_pick(g, alive, limit)) record(g.part(*v), {*v});
  };

  bool exhaustive = options.strategy != ExtractStrategy::greedy;
  std::optional<BipartiteMasks> bm;
  if (exhaustive) {
    try {
      bm = BipartiteMasks::from_labels(g);
    } catch (const CapExceeded&) {
      if (options.strategy == ExtractStrategy::exhaustive) throw;
      exhaustive = false;
    }
  }

  if (!exhaustive) {
    run_greedy();
  } else {
    log.strategy_used = ExtractStrategy::exhaustive;
    std::array<Mask, 2> live{detail::low_bits(bm->size(0)), detail::low_bits(bm->size(1))};
    bool switched = false;
    for (bool progress = true; progress && !switched;) {
      progress = false;
      std::uint64_t nodes = 0;
      try {
        for (int s = 1; s <= max_size && !progress; ++s) {
          const long limit = floor_tolerant(rho * s);
          for (int part = 0; part < 2 && !progress; ++part) {
            if (popcount(live[part]) < s) continue;
            SmallNeighborhoodSearch search(*bm, part, live[1 - part], options.node_cap, nodes);
            if (auto u = search.find(live[part], s, limit)) {
              record(part, bm->to_vertices(part, *u));
              live[part] &= ~*u;
              progress = true;
            }
          }
        }
      } catch (const NodeCapHit&) {
        if (options.strategy == ExtractStrategy::exhaustive) {
          throw CapExceeded("extract_expander: candidate scan exceeded " +
                            std::to_string(options.node_cap) + " nodes");
        }
        switched = true;
      }
    }
    if (switched) run_greedy();
  }

  std::vector<Vertex> keep;
  for (int part = 0; part < 2; ++part) {
    std::vector<Vertex> members;
    for (Vertex v : g.part_members(part)) {
      if (alive[v]) members.push_back(v);
    }
    log.survivors[part] = VertexSet(members);
    keep.insert(keep.end(), members.begin(), members.end());
    if (static_cast<double>(log.deleted_per_part[part]) > alpha * n + 1e-9) {
      log.claim1_holds = false;
    }
  }
  auto induced = induced_subgraph(g, VertexSet(std::move(keep)));
  return {std::move(induced.graph), std::move(induced.original), std::move(log)};
}

ExpansionReport verify_expansion(const Graph& g, double alpha, int big_n, std::uint64_t node_cap) {
  if (!g.is_labeled()) throw NotBipartite("verify_expansion: graph carries no part labels");
  if (!(alpha > 0 && alpha < 1)) throw InvalidInput("verify_expansion: alpha must lie in (0, 1)");
  if (big_n < 1) throw InvalidInput("verify_expansion: N must be positive");

  ExpansionReport report;
  const double rho = expansion_ratio(alpha);
  const std::array<int, 2> sizes{static_cast<int>(g.part_members(0).size()),
                                 static_cast<int>(g.part_members(1).size())};

  report.conclusion1 = true;
  for (int part = 0; part < 2 && report.conclusion1; ++part) {
    const double need = (1 - alpha) * big_n;
    if (sizes[part] + 1e-9 < need) {
      report.conclusion1 = false;
      report.violation = ExpansionViolation{1, part, {}, static_cast<double>(sizes[part]), need};
    }
  }

  std::optional<BipartiteMasks> bm;
  try {
    bm = BipartiteMasks::from_labels(g);
  } catch (const CapExceeded&) {
    report.complete = false;
    return report;
  }

  const int small_max = static_cast<int>(floor_tolerant(alpha * big_n));
  const long big_limit = floor_tolerant((1 - 2 * alpha) * big_n);
  report.conclusion2 = true;
  report.conclusion3 = true;
  try {
    for (int part = 0; part < 2 && report.conclusion2; ++part) {
      SmallNeighborhoodSearch search(*bm, part, detail::low_bits(bm->size(1 - part)), node_cap,
                                     report.nodes);
      for (int s = 1; s <= std::min(small_max, sizes[part]); ++s) {
        if (auto u = search.find(detail::low_bits(sizes[part]), s, floor_tolerant(rho * s))) {
          report.conclusion2 = false;
          if (!report.violation) {
            report.violation = ExpansionViolation{
                2, part, mask_to_set(*bm, part, *u),
                static_cast<double>(popcount(bm->neighborhood(part, *u))), rho * s};
          }
          break;
        }
      }
    }
    const int s3 = small_max + 1;
    for (int part = 0; part < 2 && report.conclusion3; ++part) {
      if (s3 > sizes[part]) continue;
      report.monotonicity_extended = true;
      SmallNeighborhoodSearch search(*bm, part, detail::low_bits(bm->size(1 - part)), node_cap,
                                     report.nodes);
      if (auto u = search.find(detail::low_bits(sizes[part]), s3, big_limit)) {
        report.conclusion3 = false;
        if (!report.violation) {
          report.violation = ExpansionViolation{
              3, part, mask_to_set(*bm, part, *u),
              static_cast<double>(popcount(bm->neighborhood(part, *u))), (1 - 2 * alpha) * big_n};
        }
      }
    }
  } catch (const NodeCapHit&) {
    report.complete = false;
  }
  return report;
}

std::string to_string(JoinedVerdict verdict) {
  switch (verdict) {
    case JoinedVerdict::joined: return "joined";
    case JoinedVerdict::not_joined: return "not-joined";
    case JoinedVerdict::probably_joined: return "probably-joined";
  }
  return "unknown";
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::sampled: return "sampled";
    case SearchMode::automatic: return "auto";
  }
  return "unknown";
}

std::string to_string(ExtractStrategy strategy) {
  switch (strategy) {
    case ExtractStrategy::exhaustive: return "exhaustive";
    case ExtractStrategy::greedy: return "greedy";
    case ExtractStrategy::automatic: return "auto";
  }
  return "unknown";
}

}  // namespace cycram
