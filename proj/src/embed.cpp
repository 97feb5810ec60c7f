#include "cycram/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cycram/errors.hpp"
#include "cycram/numeric.hpp"
#include "detail/bipartite_masks.hpp"

namespace cycram {

EmbedSpec make_embed_spec(Graph host, std::vector<PlantedTree> trees, long m) {
  EmbedSpec spec;
  spec.delta = 0;
  spec.M = 0;
  for (const auto& pt : trees) {
    spec.delta = std::max(spec.delta, pt.tree.max_degree());
    spec.M += pt.tree.vertex_count();
  }
  spec.host = std::move(host);
  spec.trees = std::move(trees);
  spec.m = m;
  return spec;
}

void require_valid(const EmbedSpec& spec) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(spec.host.vertex_count()), 0);
  long total = 0;
  for (std::size_t t = 0; t < spec.trees.size(); ++t) {
    const auto& pt = spec.trees[t];
    if (pt.root_image < 0 || pt.root_image >= spec.host.vertex_count()) {
      throw InvalidInput("root " + std::to_string(pt.root_image) + " is not a host vertex");
    }
    if (seen[pt.root_image]) {
      throw InvalidInput("root " + std::to_string(pt.root_image) + " is used twice");
    }
    seen[pt.root_image] = 1;
    if (pt.tree.max_degree() > spec.delta) {
      throw InvalidInput("tree " + std::to_string(t) + " has degree " +
                         std::to_string(pt.tree.max_degree()) + " above delta " +
                         std::to_string(spec.delta));
    }
    total += pt.tree.vertex_count();
  }
  if (total > spec.M) {
    throw InvalidInput("forest has " + std::to_string(total) + " vertices, above M = " +
                       std::to_string(spec.M));
  }
}

EmbedResult embed_forest(const EmbedSpec& spec, std::uint64_t budget) {
  require_valid(spec);
  const Graph& host = spec.host;
  EmbedResult result;
  auto& image = result.embedding.image;
  std::vector<std::uint8_t> used(static_cast<std::size_t>(host.vertex_count()), 0);

  struct Slot {
    int tree;
    Vertex v;
    int depth;
  };
  std::vector<Slot> order;
  for (std::size_t t = 0; t < spec.trees.size(); ++t) {
    const auto& tree = spec.trees[t].tree;
    image.emplace_back(static_cast<std::size_t>(tree.vertex_count()), -1);
    image.back()[tree.root()] = spec.trees[t].root_image;
    used[spec.trees[t].root_image] = 1;
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
      if (v != tree.root()) order.push_back({static_cast<int>(t), v, tree.depth(v)});
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const Slot& a, const Slot& b) {
    return std::tie(a.depth, a.tree, a.v) < std::tie(b.depth, b.tree, b.v);
  });

  struct Frame {
    bool ready = false;
    std::vector<Vertex> candidates;
    std::size_t next = 0;
  };
  std::vector<Frame> frames(order.size());
  Embedding deepest = result.embedding;
  std::size_t deepest_k = 0;

  auto unused_degree = [&](Vertex y) {
    int c = 0;
    for (Vertex z : host.neighbors(y)) c += used[z] ? 0 : 1;
    return c;
  };

  std::size_t k = 0;
  for (;;) {
    if (k == order.size()) {
      result.success = true;
      break;
    }
    Frame& frame = frames[k];
    const Slot& slot = order[k];
    const auto& tree = spec.trees[slot.tree].tree;
    if (!frame.ready) {
      const Vertex anchor = image[slot.tree][tree.parent(slot.v)];
      std::vector<std::pair<int, Vertex>> scored;
      for (Vertex y : host.neighbors(anchor)) {
        if (!used[y]) scored.push_back({-unused_degree(y), y});
      }
      std::sort(scored.begin(), scored.end());
      frame.candidates.clear();
      for (const auto& [score, y] : scored) frame.candidates.push_back(y);
      frame.next = 0;
      frame.ready = true;
    }
    if (frame.next < frame.candidates.size()) {
      if (result.nodes >= budget) {
        result.budget_exhausted = true;
        break;
      }
      ++result.nodes;
      const Vertex y = frame.candidates[frame.next++];
      image[slot.tree][slot.v] = y;
      used[y] = 1;
      ++k;
      if (k > deepest_k) {
        deepest_k = k;
        deepest = result.embedding;
      }
      continue;
    }
    if (k == deepest_k) result.blocking = std::array<int, 2>{slot.tree, slot.v};
    frame.ready = false;
    if (k == 0) break;
    --k;
    const Slot& prev = order[k];
    used[image[prev.tree][prev.v]] = 0;
    image[prev.tree][prev.v] = -1;
    ++result.backtracks;
  }

  if (!result.success) {
    if (!result.blocking && deepest_k < order.size()) {
      result.blocking = std::array<int, 2>{order[deepest_k].tree, order[deepest_k].v};
    }
    result.embedding = std::move(deepest);
  } else {
    result.blocking.reset();
    const auto check = validate_embedding(host, spec.trees, result.embedding);
    if (!check.ok) throw std::logic_error("embed_forest produced an invalid embedding: " + check.problems.front());
  }
  return result;
}

EmbedCheck validate_embedding(const Graph& host, const std::vector<PlantedTree>& trees,
                              const Embedding& embedding) {
  EmbedCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.problems.push_back(std::move(msg));
  };
  if (embedding.image.size() != trees.size()) {
    fail("embedding covers " + std::to_string(embedding.image.size()) + " trees, expected " +
         std::to_string(trees.size()));
    return check;
  }
  std::vector<int> owner(static_cast<std::size_t>(host.vertex_count()), 0);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& tree = trees[t].tree;
    const auto& img = embedding.image[t];
    if (static_cast<int>(img.size()) != tree.vertex_count()) {
      fail("tree " + std::to_string(t) + " image has the wrong length");
      continue;
    }
    if (img[tree.root()] != trees[t].root_image) {
      fail("tree " + std::to_string(t) + " root is not mapped to " +
           std::to_string(trees[t].root_image));
    }
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
      const Vertex y = img[v];
      if (y < 0 || y >= host.vertex_count()) {
        fail("tree " + std::to_string(t) + " vertex " + std::to_string(v) + " is unmapped");
        continue;
      }
      if (owner[y]++) fail("host vertex " + std::to_string(y) + " is used twice");
      const Vertex p = tree.parent(v);
      if (p >= 0 && img[p] >= 0 && img[p] < host.vertex_count() && !host.has_edge(y, img[p])) {
        fail("tree edge (" + std::to_string(p) + ", " + std::to_string(v) + ") of tree " +
             std::to_string(t) + " maps to a non-edge");
      }
    }
  }
  return check;
}

namespace {

using detail::BipartiteMasks;
using detail::Mask;
using detail::popcount;

// Scans sizes [lo, hi] of each part with `ok(part, set, nbr, size)` returning
// (lhs, rhs); records the first set with lhs < rhs.
template <class Eval>
bool scan_condition(const BipartiteMasks& bm, int condition, std::array<long, 2> lo,
                    std::array<long, 2> hi, std::uint64_t cap, PreconditionReport& report,
                    Eval&& eval) {
  for (int part = 0; part < 2; ++part) {
    const long top = std::min<long>(hi[part], bm.size(part));
    for (long s = std::max<long>(lo[part], 1); s <= top; ++s) {
      std::optional<SetViolation> found;
      const bool finished = detail::for_each_subset(
          bm, part, detail::low_bits(bm.size(part)), static_cast<int>(s), [&](Mask set, Mask nbr) {
            if (report.sets_examined >= cap) {
              report.complete = false;
              return false;
            }
            ++report.sets_examined;
            const auto [lhs, rhs] = eval(part, set, nbr, s);
            if (lhs < rhs) {
              found = SetViolation{condition, part, VertexSet(bm.to_vertices(part, set)), lhs, rhs};
              return false;
            }
            return true;
          });
      if (found) {
        if (!report.violation) report.violation = std::move(found);
        return false;
      }
      if (!finished) return false;
    }
  }
  return true;
}

std::optional<BipartiteMasks> masks_or_partial(const Graph& host, PreconditionReport& report) {
  if (!host.is_labeled()) throw NotBipartite("expansion conditions need a labeled bipartite host");
  try {
    return BipartiteMasks::from_labels(host);
  } catch (const CapExceeded&) {
    report.complete = false;
    return std::nullopt;
  }
}

}  // namespace

PreconditionReport check_forest_preconditions(const EmbedSpec& spec, std::uint64_t cap) {
  require_valid(spec);
  if (spec.m < 1) throw InvalidInput("m must be positive");
  PreconditionReport report;
  const auto bm = masks_or_partial(spec.host, report);
  if (!bm) return report;

  std::array<Mask, 2> xmask{0, 0};
  std::array<std::vector<long>, 2> weight{std::vector<long>(bm->size(0), 0),
                                          std::vector<long>(bm->size(1), 0)};
  for (int part = 0; part < 2; ++part) {
    for (int i = 0; i < bm->size(part); ++i) {
      for (const auto& pt : spec.trees) {
        if (pt.root_image == bm->side[part][i]) {
          xmask[part] |= Mask{1} << i;
          weight[part][i] = pt.tree.root_degree() + spec.delta;
        }
      }
    }
  }

  const long delta = spec.delta;
  report.condition1 = scan_condition(
      *bm, 1, {1, 1}, {spec.m, spec.m}, cap, report, [&](int part, Mask set, Mask nbr, long) {
        long rhs = 2 * delta * popcount(set & ~xmask[part]);
        for (Mask r = set & xmask[part]; r; r &= r - 1) rhs += weight[part][std::countr_zero(r)];
        return std::pair<long, long>{popcount(nbr & ~xmask[1 - part]), rhs};
      });
  if (!report.complete) return report;
  const long need = spec.M + 8 * delta * spec.m;
  report.condition2 = scan_condition(
      *bm, 2, {spec.m, spec.m}, {2 * spec.m, 2 * spec.m}, cap, report,
      [&](int, Mask, Mask nbr, long) { return std::pair<long, long>{popcount(nbr), need}; });
  if (!report.complete) report.condition2 = false;
  return report;
}

PreconditionReport check_tree_preconditions(const TreeEmbedSpec& spec, std::uint64_t cap) {
  PreconditionReport report;
  const auto bm = masks_or_partial(spec.host, report);
  if (!bm) return report;
  const long d = spec.D;
  report.condition1 = scan_condition(
      *bm, 1, {1, 1}, spec.m, cap, report,
      [&](int, Mask, Mask nbr, long s) { return std::pair<long, long>{popcount(nbr), d * s + 1}; });
  if (!report.complete) return report;
  report.condition2 = scan_condition(
      *bm, 2, {spec.m[0] + 1, spec.m[1] + 1}, {2 * spec.m[0], 2 * spec.m[1]}, cap, report,
      [&](int part, Mask, Mask nbr, long s) {
        return std::pair<long, long>{popcount(nbr), d * s + spec.M[1 - part]};
      });
  if (!report.complete) report.condition2 = false;
  return report;
}

namespace {

InequalityCheck at_least(std::string name, double lhs, double rhs) {
  const double slack = 1e-12 * std::max(1.0, std::fabs(rhs));
  return {std::move(name), lhs, rhs, lhs >= rhs - slack};
}

double size_threshold(double numerator, double denominator) {
  return denominator > 0 ? numerator / denominator : std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<InequalityCheck> even_cycle_hypotheses(double alpha, long big_n, long n) {
  return {
      {"0 < alpha < 0.1", 0.1, alpha, alpha > 0 && alpha < 0.1},
      at_least("N >= (n + 4) / (2 - 20 alpha)", static_cast<double>(big_n),
               size_threshold(static_cast<double>(n) + 4, 2 - 20 * alpha)),
  };
}

std::vector<InequalityCheck> even_cycle_sufficient(double alpha, long big_n, long n) {
  const double big = static_cast<double>(big_n);
  const double m_i = 2.0 * static_cast<double>(ceil_tolerant(alpha * big)) + n / 2.0;
  return {
      at_least("(1 - 2 alpha) / (2 alpha) >= 3", (1 - 2 * alpha) / (2 * alpha), 3),
      at_least("(1 - 2 alpha) N >= 6 alpha N + 2 ceil(alpha N) + n / 2", (1 - 2 * alpha) * big,
               6 * alpha * big + m_i),
  };
}

std::vector<InequalityCheck> odd_cycle_hypotheses(double alpha, long big_n, long n) {
  return {
      {"0 < alpha <= 0.033", 0.033, alpha, alpha > 0 && alpha <= 0.033},
      at_least("N >= (n + 28) / (1 - 30 alpha)", static_cast<double>(big_n),
               size_threshold(static_cast<double>(n) + 28, 1 - 30 * alpha)),
  };
}

std::vector<InequalityCheck> odd_cycle_sufficient(double alpha, long big_n, long n) {
  const double big = static_cast<double>(big_n);
  return {
      at_least("(1 - 2 alpha) / (2 alpha) >= 8", (1 - 2 * alpha) / (2 * alpha), 8),
      at_least("(1 - 2 alpha) N >= 28 ceil(alpha N) + n", (1 - 2 * alpha) * big,
               28.0 * static_cast<double>(ceil_tolerant(alpha * big)) + static_cast<double>(n)),
  };
}

bool all_hold(const std::vector<InequalityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

bool is_cycle_of_length(const Graph& g, const std::vector<Vertex>& cycle, int n) {
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.vertex_count()) return false;
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

namespace {

std::string failed_names(const std::vector<InequalityCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!c.holds) out += (out.empty() ? "" : "; ") + c.name;
  }
  return out;
}

VertexSet map_set(const VertexSet& s, const std::vector<Vertex>& to) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(to[v]);
  return VertexSet(std::move(out));
}

ExtractionLog map_log(ExtractionLog log, const std::vector<Vertex>& to) {
  for (auto& d : log.deleted) d.set = map_set(d.set, to);
  for (auto& s : log.survivors) s = map_set(s, to);
  return log;
}

JoinedWitness map_witness(const JoinedWitness& w, const std::vector<Vertex>& to) {
  return {map_set(w.a, to), map_set(w.b, to)};
}

void map_embedding(Embedding& e, const std::vector<Vertex>& to) {
  for (auto& img : e.image) {
    for (auto& v : img) {
      if (v >= 0) v = to[v];
    }
  }
}

std::vector<Vertex> images_of(const std::vector<Vertex>& image, const VertexSet& tree_vertices) {
  std::vector<Vertex> out;
  for (Vertex v : tree_vertices) out.push_back(image[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// First host edge (u, w) with u in `from`, w in `to`, u ascending then w ascending.
std::optional<std::array<Vertex, 2>> crossing_edge(const Graph& host,
                                                   const std::vector<Vertex>& from,
                                                   const std::vector<Vertex>& to) {
  std::vector<std::uint8_t> in_to(static_cast<std::size_t>(host.vertex_count()), 0);
  for (Vertex w : to) in_to[w] = 1;
  for (Vertex u : from) {
    for (Vertex w : host.neighbors(u)) {
      if (in_to[w]) return std::array<Vertex, 2>{u, w};
    }
  }
  return std::nullopt;
}

Vertex preimage(const std::vector<Vertex>& image, Vertex host_vertex) {
  const auto it = std::find(image.begin(), image.end(), host_vertex);
  return static_cast<Vertex>(it - image.begin());
}

int equal_parts(const Graph& g) {
  if (!g.is_labeled()) throw NotBipartite("find_even_cycle needs a labeled bipartite graph");
  const auto n0 = g.part_members(0).size();
  if (n0 != g.part_members(1).size()) throw InvalidInput("parts have unequal sizes");
  return static_cast<int>(n0);
}

}  // namespace

EvenCycleResult find_even_cycle(const Graph& g, int n, double alpha,
                                const PipelineOptions& options) {
  const int big_n = equal_parts(g);
  if (n < 4 || n % 2 != 0) throw InvalidInput("n must be an even integer >= 4");
  if (!(alpha > 0 && alpha < 1)) throw InvalidInput("alpha must lie in (0, 1)");

  EvenCycleResult res;
  res.hypotheses = even_cycle_hypotheses(alpha, big_n, n);
  res.sufficient = even_cycle_sufficient(alpha, big_n, n);
  res.out_of_hypothesis = !all_hold(res.hypotheses);
  if (res.out_of_hypothesis && !options.relaxed) {
    throw InfeasibleParameters("hypotheses fail: " + failed_names(res.hypotheses) +
                               " (use relaxed mode to run anyway)");
  }

  res.joined = is_alpha_joined(g, alpha, options.joined);
  if (res.joined.verdict == JoinedVerdict::not_joined) {
    res.status = EvenStatus::not_joined;
    res.witness = res.joined.witness;
    return res;
  }

  auto ext = extract_expander(g, alpha, options.extract);
  res.extraction = ext.log;
  res.leaves = static_cast<int>(ceil_tolerant(alpha * big_n));
  RootedTree gadget;
  try {
    gadget = build_even_gadget(n, res.leaves);
  } catch (const InfeasibleParameters& e) {
    res.status = EvenStatus::gadget_infeasible;
    res.detail = e.what();
    return res;
  }

  const Graph& host = ext.expander;
  const long m = std::max<long>(1, floor_tolerant(alpha * big_n));
  std::optional<EmbedResult> found;
  for (Vertex r = 0; r < host.vertex_count() && res.roots_tried < options.root_attempts; ++r) {
    ++res.roots_tried;
    auto er = embed_forest(make_embed_spec(host, {PlantedTree{r, gadget}}, m), options.embed_budget);
    if (er.success) {
      found = std::move(er);
      break;
    }
    res.last_embedding = std::move(er);
  }
  if (!found) {
    res.status = EvenStatus::embedding_failed;
    res.detail = "no embedding within budget for " + std::to_string(res.roots_tried) + " root images";
    if (res.last_embedding) map_embedding(res.last_embedding->embedding, ext.original);
    return res;
  }

  const auto& image = found->embedding.image[0];
  const auto& marks = *gadget.marks();
  const auto s0 = images_of(image, marks[0]);
  const auto s1 = images_of(image, marks[1]);
  res.last_embedding = *found;
  map_embedding(res.last_embedding->embedding, ext.original);

  const auto edge = crossing_edge(host, s0, s1);
  if (!edge) {
    res.status = EvenStatus::no_crossing_edge;
    JoinedWitness w{map_set(VertexSet(s0), ext.original), map_set(VertexSet(s1), ext.original)};
    if (g.part(*w.a.begin()) != 0) std::swap(w.a, w.b);
    res.witness = std::move(w);
    return res;
  }
  for (Vertex t : gadget.path(preimage(image, (*edge)[0]), preimage(image, (*edge)[1]))) {
    res.cycle.push_back(ext.original[image[t]]);
  }
  if (!is_cycle_of_length(g, res.cycle, n)) {
    throw std::logic_error("find_even_cycle assembled an invalid cycle");
  }
  res.status = EvenStatus::cycle;
  return res;
}

OddCycleResult find_odd_cycle_or_structure(const Graph& g, const VertexSet& v0,
                                           const VertexSet& v1, int n, double alpha,
                                           const PipelineOptions& options) {
  require_valid(g, v0);
  require_valid(g, v1);
  if (v0.size() != v1.size() || v0.empty()) throw InvalidInput("v0 and v1 must be nonempty and of equal size");
  for (Vertex v : v0) {
    if (v1.contains(v)) throw InvalidInput("v0 and v1 must be disjoint");
  }
  if (n < 3 || n % 2 == 0) throw InvalidInput("n must be an odd integer >= 3");
  if (!(alpha > 0 && alpha < 1)) throw InvalidInput("alpha must lie in (0, 1)");
  const int big_n = static_cast<int>(v0.size());

  OddCycleResult res;
  res.hypotheses = odd_cycle_hypotheses(alpha, big_n, n);
  res.sufficient = odd_cycle_sufficient(alpha, big_n, n);
  res.out_of_hypothesis = !all_hold(res.hypotheses);
  if (res.out_of_hypothesis && !options.relaxed) {
    throw InfeasibleParameters("hypotheses fail: " + failed_names(res.hypotheses) +
                               " (use relaxed mode to run anyway)");
  }

  // Cross graph H: ids 0..N-1 follow v0, N..2N-1 follow v1.
  std::vector<Vertex> to_g(v0.begin(), v0.end());
  to_g.insert(to_g.end(), v1.begin(), v1.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < 2 * big_n; ++i) local[to_g[i]] = i;
  std::vector<Edge> cross;
  for (int i = 0; i < big_n; ++i) {
    for (Vertex y : g.neighbors(to_g[i])) {
      if (local[y] >= big_n) cross.push_back({i, local[y]});
    }
  }
  const Graph h = Graph::bipartite(big_n, big_n, cross);

  res.joined = is_alpha_joined(h, alpha, options.joined);
  if (res.joined.verdict == JoinedVerdict::not_joined) {
    res.status = OddStatus::case_one;
    res.case_one = map_witness(*res.joined.witness, to_g);
    return res;
  }

  auto ext = extract_expander(h, alpha, options.extract);
  res.extraction = map_log(ext.log, to_g);
  res.leaves = static_cast<int>(ceil_tolerant(alpha * big_n));
  OddGadgets gadgets;
  try {
    gadgets = build_odd_gadgets(n, res.leaves);
  } catch (const InfeasibleParameters& e) {
    res.status = OddStatus::gadget_infeasible;
    res.detail = e.what();
    return res;
  }

  const Graph& host = ext.expander;
  std::vector<Vertex> host_to_g(ext.original.size());
  std::vector<int> h_to_host(static_cast<std::size_t>(h.vertex_count()), -1);
  for (std::size_t i = 0; i < ext.original.size(); ++i) {
    host_to_g[i] = to_g[ext.original[i]];
    h_to_host[ext.original[i]] = static_cast<int>(i);
  }
  const long m = std::max<long>(1, floor_tolerant(alpha * big_n));

  for (int side = 0; side < 2 && res.pairs_tried < options.pair_budget; ++side) {
    const auto& members = ext.log.survivors[side];
    for (Vertex a : members) {
      for (Vertex b : members) {
        if (res.pairs_tried >= options.pair_budget) break;
        if (a == b || !g.has_edge(to_g[a], to_g[b])) continue;
        ++res.pairs_tried;
        const Vertex x0 = h_to_host[a];
        const Vertex x1 = h_to_host[b];
        const auto er = embed_forest(
            make_embed_spec(host, {PlantedTree{x0, gadgets.t0}, PlantedTree{x1, gadgets.t1}}, m),
            options.embed_budget);
        if (!er.success) continue;
        ++res.embeddings_found;
        const auto& img0 = er.embedding.image[0];
        const auto& img1 = er.embedding.image[1];
        const auto s0 = images_of(img0, (*gadgets.t0.marks())[0]);
        const auto s1 = images_of(img1, (*gadgets.t1.marks())[1]);
        const auto edge = crossing_edge(host, s0, s1);
        if (!edge) {
          JoinedWitness w{map_set(VertexSet(s0), host_to_g), map_set(VertexSet(s1), host_to_g)};
          if (!v0.contains(*w.a.begin())) std::swap(w.a, w.b);
          res.status = OddStatus::case_one;
          res.case_one = std::move(w);
          res.detail = "embedded leaf images span no edge";
          return res;
        }
        for (Vertex t : gadgets.t0.path(preimage(img0, (*edge)[0]), gadgets.t0.root())) {
          res.cycle.push_back(host_to_g[img0[t]]);
        }
        for (Vertex t : gadgets.t1.path(gadgets.t1.root(), preimage(img1, (*edge)[1]))) {
          res.cycle.push_back(host_to_g[img1[t]]);
        }
        if (!is_cycle_of_length(g, res.cycle, n)) {
          throw std::logic_error("find_odd_cycle_or_structure assembled an invalid cycle");
        }
        res.status = OddStatus::cycle;
        return res;
      }
    }
  }

  const auto& surv = res.extraction->survivors;
  const bool independent = edges_within(g, surv[0]) == 0 && edges_within(g, surv[1]) == 0;
  const double need = (1 - alpha) * big_n - 1e-9;
  if (independent && static_cast<double>(surv[0].size()) >= need &&
      static_cast<double>(surv[1].size()) >= need) {
    res.status = OddStatus::case_two;
    res.case_two = surv;
    return res;
  }
  res.status = OddStatus::inconclusive;
  res.detail = independent ? "survivor sets are independent but below (1 - alpha) N"
                           : "no cycle from " + std::to_string(res.pairs_tried) +
                                 " adjacent root pairs (" + std::to_string(res.embeddings_found) +
                                 " embedded)";
  return res;
}

std::string to_string(EvenStatus status) {
  switch (status) {
    case EvenStatus::cycle: return "cycle";
    case EvenStatus::not_joined: return "not-joined";
    case EvenStatus::gadget_infeasible: return "gadget-infeasible";
    case EvenStatus::embedding_failed: return "embedding-failed";
    case EvenStatus::no_crossing_edge: return "no-crossing-edge";
  }
  return "unknown";
}

std::string to_string(OddStatus status) {
  switch (status) {
    case OddStatus::cycle: return "cycle";
    case OddStatus::case_one: return "case-one";
    case OddStatus::case_two: return "case-two";
    case OddStatus::inconclusive: return "inconclusive";
    case OddStatus::gadget_infeasible: return "gadget-infeasible";
  }
  return "unknown";
}

}  // namespace cycram
