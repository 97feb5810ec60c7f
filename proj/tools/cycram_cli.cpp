#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycram/bounds.hpp"
#include "cycram/embed.hpp"
#include "cycram/errors.hpp"
#include "cycram/expander.hpp"
#include "cycram/gadgets.hpp"
#include "cycram/graph_io.hpp"
#include "cycram/ramsey.hpp"
#include "cycram/random_models.hpp"
#include "cycram/rng.hpp"
#include "cycram/serialize.hpp"
#include "manifest.hpp"

#ifndef CYCRAM_VERSION
#define CYCRAM_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace cycram;
using cycram::cli::ParamRegistry;
using cycram::cli::RunManifest;

namespace {

enum Exit { kDefinite = 0, kUsage = 1, kInconclusive = 2 };

struct Outcome {
  json body = json::object();
  int code = kDefinite;
  // edge-list / coloring / CSV artifact written with a manifest line in front
  std::optional<fs::path> artifact;
  std::string artifact_text;
  // plain-text stdout replacing the key listing (edge lists, CSV)
  std::optional<std::string> plain;
};

bool g_trace = false;
const auto g_start = std::chrono::steady_clock::now();

void trace(const std::string& msg) {
  if (!g_trace) return;
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
  std::fprintf(stderr, "[trace %8.3fs] %s\n", t, msg.c_str());
}

SearchMode search_mode(const std::string& s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "sampled") return SearchMode::sampled;
  return SearchMode::automatic;
}

ExtractStrategy extract_strategy(const std::string& s) {
  if (s == "exhaustive") return ExtractStrategy::exhaustive;
  if (s == "greedy") return ExtractStrategy::greedy;
  return ExtractStrategy::automatic;
}

Graph load_graph(RunManifest& m, const std::string& path) {
  trace("reading " + path);
  m.add_input(path);
  Graph g = read_graph(path);
  trace("graph: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
  return g;
}

std::string fmt_real(Real x, int digits = 20) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

struct Range {
  Real lo = 0, hi = 0, step = 1;
};

Range parse_range(const std::string& text, const std::string& flag) {
  Range r;
  std::vector<Real> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stold(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput(flag + " expects lo:hi[:step], got '" + text + "'");
    }
  }
  if (parts.size() < 2 || parts.size() > 3) throw InvalidInput(flag + " expects lo:hi[:step], got '" + text + "'");
  r.lo = parts[0];
  r.hi = parts[1];
  if (parts.size() == 3) r.step = parts[2];
  if (!(r.step > 0) || r.hi < r.lo) throw InvalidInput(flag + " needs lo <= hi and a positive step");
  return r;
}

std::vector<Real> range_points(const Range& r) {
  std::vector<Real> pts;
  for (long i = 0;; ++i) {
    const Real x = r.lo + static_cast<Real>(i) * r.step;
    if (x > r.hi + r.step / 2) break;
    pts.push_back(x);
  }
  return pts;
}

VertexSet to_set(const std::vector<int>& ids) { return VertexSet(std::vector<Vertex>(ids.begin(), ids.end())); }

void print_listing(const json& body) {
  for (const auto& [k, v] : body.items()) {
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle Ramsey toolkit: random models, expanders, tree embeddings and bounds", "cycram"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", CYCRAM_VERSION);

  bool json_out = false;
  std::uint64_t seed = 0;
  try {
    seed = cli::default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  app.add_flag("--json", json_out, "machine-readable JSON on standard output");
  app.add_option("--seed", seed, "seed for every random choice (default: $CYCRAM_SEED or 0)");
  app.add_flag("--trace", g_trace, "progress messages on standard error");

  ParamRegistry reg;
  std::map<CLI::App*, std::function<Outcome(RunManifest&)>> runners;

  // shared budget knobs
  std::uint64_t embed_budget = 1'000'000;
  std::uint64_t subset_cap = 50'000'000;
  std::uint64_t coloring_cap = 200'000'000;

  // --- gen -------------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("gen", "sample G(N,N,p) or G(N,p) into an edge-list file");
    static std::string model = "bipartite", out;
    static ParamSet p;
    reg.add(sub, "--model", model, "bipartite or graph")->check(CLI::IsMember({"bipartite", "graph"}));
    reg.add(sub, "--c1", p.c1, "N = c1 n")->required();
    reg.add(sub, "--n", p.n, "scale parameter n")->required();
    reg.add(sub, "--c2", p.c2, "p = c2 / n")->required();
    reg.add(sub, "--c3", p.c3, "set size parameter, reported in the validity check");
    reg.add(sub, "--eps", p.eps, "edge-count window parameter");
    reg.add(sub, "--delta", p.delta, "density tolerance, reported in the validity check");
    reg.add(sub, "--out", out, "edge-list file (default: standard output)", false);
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Model mod = model == "graph" ? Model::graph : Model::bipartite;
      trace("sampling " + model + " model, N = " + std::to_string(p.N()));
      const Graph g = mod == Model::bipartite ? sample_bipartite(p, m.seed) : sample_graph(p, m.seed);
      const EdgeWindow w = edge_count_window(p, mod);
      const double e = static_cast<double>(g.edge_count());
      o.body["model"] = model;
      o.body["rng"] = std::string(CounterRng::kAlgorithm);
      o.body["vertices"] = g.vertex_count();
      o.body["edges"] = g.edge_count();
      o.body["window"] = {{"lower", w.lower}, {"upper", w.upper}};
      o.body["edge_count_in_window"] = e >= w.lower && e <= w.upper;
      o.body["validity"] = check_validity(p, mod);
      std::ostringstream el;
      format_graph(g, el);
      if (!out.empty()) {
        o.artifact = fs::path(out);
        o.artifact_text = el.str();
        o.body["out"] = out;
      } else if (json_out) {
        o.body["graph"] = g;
      } else {
        o.plain = el.str();
      }
      return o;
    };
  }

  // --- density ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("density", "check the local-density property of a graph");
    static std::string graph, model = "bipartite", mode = "min-size";
    static ParamSet p;
    static std::uint64_t budget = 10000;
    reg.add(sub, "--graph", graph, "edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--model", model, "bipartite or graph")->check(CLI::IsMember({"bipartite", "graph"}));
    reg.add(sub, "--c1", p.c1, "N = c1 n")->required();
    reg.add(sub, "--n", p.n, "scale parameter n")->required();
    reg.add(sub, "--c2", p.c2, "p = c2 / n")->required();
    reg.add(sub, "--c3", p.c3, "sets of size >= c3 n")->required();
    reg.add(sub, "--delta", p.delta, "tolerance")->required();
    reg.add(sub, "--eps", p.eps, "edge-count window parameter");
    reg.add(sub, "--mode", mode, "min-size, all-sizes or sampled")
        ->check(CLI::IsMember({"min-size", "all-sizes", "sampled"}));
    reg.add(sub, "--budget", budget, "pairs drawn in sampled mode");
    reg.add(sub, "--subset-cap", subset_cap, "largest number of subsets an exhaustive scan may enumerate");
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      DensityOptions opt;
      opt.mode = mode == "sampled" ? DensityMode::sampled
                 : mode == "all-sizes" ? DensityMode::all_sizes
                                       : DensityMode::min_size;
      opt.budget = budget;
      opt.seed = m.seed;
      opt.enumeration_cap = subset_cap;
      if (!g.is_labeled()) {
        // unlabeled input: first half against second half
        const int h = g.vertex_count() / 2;
        std::vector<Vertex> a, b;
        for (int v = 0; v < h; ++v) a.push_back(v);
        for (int v = h; v < 2 * h; ++v) b.push_back(v);
        opt.sides = std::array<VertexSet, 2>{VertexSet(a), VertexSet(b)};
      }
      const auto rep = verify_density(g, p, model == "graph" ? Model::graph : Model::bipartite, opt);
      o.body = rep;
      // a sampled scan can refute the property but never confirm it
      if (opt.mode == DensityMode::sampled && rep.property2_ok) o.code = kInconclusive;
      return o;
    };
  }

  // --- joined ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("joined", "decide whether a bipartite graph is alpha-joined");
    static std::string graph, mode = "exhaustive";
    static double alpha = 0.25;
    static std::uint64_t budget = 20000;
    reg.add(sub, "--graph", graph, "bipartite edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--alpha", alpha, "alpha in (0, 1/2)")->required();
    reg.add(sub, "--mode", mode, "exhaustive, sampled or auto")
        ->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
    reg.add(sub, "--budget", budget, "random set pairs drawn in sampled mode");
    reg.add(sub, "--subset-cap", subset_cap, "search nodes allowed in exhaustive mode");
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      JoinedOptions opt;
      opt.mode = search_mode(mode);
      opt.budget = budget;
      opt.seed = m.seed;
      opt.node_cap = subset_cap;
      const auto r = is_alpha_joined(g, alpha, opt);
      o.body = r;
      if (r.verdict == JoinedVerdict::probably_joined) o.code = kInconclusive;
      return o;
    };
  }

  // --- expand ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("expand", "extract a bipartite expander and verify its conclusions");
    static std::string graph, strategy = "exhaustive";
    static double alpha = 0.25;
    reg.add(sub, "--graph", graph, "bipartite edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--alpha", alpha, "alpha in (0, 1/2)")->required();
    reg.add(sub, "--strategy", strategy, "exhaustive, greedy or auto")
        ->check(CLI::IsMember({"exhaustive", "greedy", "auto"}));
    reg.add(sub, "--subset-cap", subset_cap, "search nodes allowed per scan");
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      ExtractOptions opt;
      opt.strategy = extract_strategy(strategy);
      opt.node_cap = subset_cap;
      const auto x = extract_expander(g, alpha, opt);
      trace("extraction deleted " + std::to_string(x.log.deleted.size()) + " sets");
      if (!g.is_labeled()) throw NotBipartite("expand needs a labeled bipartite graph");
      const int big_n = static_cast<int>(g.part_members(0).size());
      const auto rep = verify_expansion(x.expander, alpha, big_n, subset_cap);
      o.body["N"] = big_n;
      o.body["extraction"] = x.log;
      o.body["expander_vertices"] = x.expander.vertex_count();
      o.body["expander_edges"] = x.expander.edge_count();
      o.body["verification"] = rep;
      if (!rep.complete) o.code = kInconclusive;
      return o;
    };
  }

  // --- gadget ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("gadget", "build the tree gadgets");
    static std::string kind = "even";
    static long n = 0, leaves = 1;
    reg.add(sub, "--kind", kind, "even, odd or binary")->check(CLI::IsMember({"even", "odd", "binary"}));
    reg.add(sub, "--n", n, "cycle length (even and odd kinds)");
    reg.add(sub, "--leaves", leaves, "leaf count L")->required();
    runners[sub] = [&](RunManifest&) {
      Outcome o;
      o.body["kind"] = kind;
      if (kind == "binary") {
        const auto t = build_binary_tree(leaves);
        o.body["tree"] = t;
        o.body["check"] = {{"ok", validate_tree(t, 3, static_cast<int>(leaves), t.height()).ok}};
      } else if (kind == "even") {
        const auto t = build_even_gadget(n, leaves);
        const auto& mk = *t.marks();
        o.body["tree"] = t;
        o.body["cross_distance"] = t.distance(*mk[0].begin(), *mk[1].begin());
        o.body["vertex_bound"] = 4 * leaves + n;
        o.body["check"] = {{"ok", validate_tree(t, 3, std::nullopt).ok}};
      } else {
        const auto gd = build_odd_gadgets(n, leaves);
        o.body["gadgets"] = gd;
        o.body["depth_sum"] = gd.t0.height() + gd.t1.height();
        o.body["vertex_bound"] = 4 * leaves + n;
        o.body["check"] = {{"ok", validate_tree(gd.t0, 3, std::nullopt).ok && validate_tree(gd.t1, 3, std::nullopt).ok}};
      }
      return o;
    };
  }

  // --- embed -----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("embed", "embed gadget trees with pinned roots into a host graph");
    static std::string graph, kind = "auto";
    static long n = 0, leaves = 1, mm = 1;
    static std::vector<int> roots;
    reg.add(sub, "--graph", graph, "host edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--kind", kind, "auto, even, odd or binary")->check(CLI::IsMember({"auto", "even", "odd", "binary"}));
    reg.add(sub, "--n", n, "cycle length for gadget kinds");
    reg.add(sub, "--leaves", leaves, "leaf count L")->required();
    reg.add(sub, "--roots", roots, "comma-separated host vertices for the tree roots")->required()->delimiter(',');
    reg.add(sub, "--m", mm, "set size parameter m of the forest conditions");
    reg.add(sub, "--embed-budget", embed_budget, "placements tried before giving up");
    reg.add(sub, "--subset-cap", subset_cap, "sets examined by the precondition scan");
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph host = load_graph(m, graph);
      std::string k = kind;
      if (k == "auto") k = n % 2 == 0 ? "even" : "odd";
      std::vector<PlantedTree> trees;
      if (k == "odd") {
        if (roots.size() != 2) throw InvalidInput("odd gadgets need exactly two roots");
        auto gd = build_odd_gadgets(n, leaves);
        trees.push_back({roots[0], std::move(gd.t0)});
        trees.push_back({roots[1], std::move(gd.t1)});
      } else {
        for (int r : roots) {
          trees.push_back({r, k == "even" ? build_even_gadget(n, leaves) : build_binary_tree(leaves)});
        }
      }
      const EmbedSpec spec = make_embed_spec(host, trees, mm);
      require_valid(spec);
      trace("embedding " + std::to_string(trees.size()) + " trees, M = " + std::to_string(spec.M));
      const auto r = embed_forest(spec, embed_budget);
      o.body["kind"] = k;
      o.body["spec"] = {{"M", spec.M}, {"delta", spec.delta}, {"m", spec.m}};
      o.body["result"] = r;
      if (r.success) {
        const auto chk = validate_embedding(host, trees, r.embedding);
        o.body["validation"] = {{"ok", chk.ok}, {"problems", chk.problems}};
      }
      if (host.is_labeled()) {
        o.body["preconditions"] = check_forest_preconditions(spec, subset_cap);
      }
      if (!r.success && r.budget_exhausted) o.code = kInconclusive;
      return o;
    };
  }

  // pipeline knobs shared by cycle-even, cycle-odd and peel
  static std::string joined_mode = "auto", strategy = "auto";
  static int root_attempts = 16, pair_budget = 64;
  auto pipeline_flags = [&](CLI::App* sub) {
    reg.add(sub, "--joined-mode", joined_mode, "exhaustive, sampled or auto")
        ->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
    reg.add(sub, "--strategy", strategy, "expander extraction: exhaustive, greedy or auto")
        ->check(CLI::IsMember({"exhaustive", "greedy", "auto"}));
    reg.add(sub, "--embed-budget", embed_budget, "placements tried per embedding");
    reg.add(sub, "--subset-cap", subset_cap, "search nodes allowed per exhaustive scan");
  };
  auto pipeline_options = [&](bool relaxed, std::uint64_t s) {
    PipelineOptions opt;
    opt.relaxed = relaxed;
    opt.joined.mode = search_mode(joined_mode);
    opt.joined.seed = s;
    opt.joined.node_cap = subset_cap;
    opt.extract.strategy = extract_strategy(strategy);
    opt.extract.node_cap = subset_cap;
    opt.embed_budget = embed_budget;
    opt.root_attempts = root_attempts;
    opt.pair_budget = pair_budget;
    return opt;
  };

  // --- cycle-even ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("cycle-even", "find C_n (n even) in an alpha-joined bipartite graph");
    static std::string graph;
    static int n = 0;
    static double alpha = 0;
    static bool relaxed = false;
    reg.add(sub, "--graph", graph, "bipartite edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--n", n, "even cycle length")->required();
    reg.add(sub, "--alpha", alpha, "alpha")->required();
    reg.add_flag(sub, "--relaxed", relaxed, "run outside the lemma hypotheses");
    reg.add(sub, "--root-attempts", root_attempts, "root images tried");
    pipeline_flags(sub);
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      const auto r = find_even_cycle(g, n, alpha, pipeline_options(relaxed, m.seed));
      trace("status " + to_string(r.status) + ", roots tried " + std::to_string(r.roots_tried));
      o.body = r;
      if (r.status == EvenStatus::embedding_failed) o.code = kInconclusive;
      if (r.status == EvenStatus::gadget_infeasible) o.code = kUsage;
      return o;
    };
  }

  // --- cycle-odd -------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("cycle-odd", "odd-cycle alternative on two disjoint vertex sets");
    static std::string graph;
    static int n = 0;
    static double alpha = 0;
    static bool relaxed = false;
    static std::vector<int> v0, v1;
    reg.add(sub, "--graph", graph, "edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--n", n, "odd cycle length")->required();
    reg.add(sub, "--alpha", alpha, "alpha")->required();
    reg.add_flag(sub, "--relaxed", relaxed, "run outside the lemma hypotheses");
    reg.add(sub, "--v0", v0, "first set (default: the lower half of the ids)", false)->delimiter(',');
    reg.add(sub, "--v1", v1, "second set (default: the next half)", false)->delimiter(',');
    reg.add(sub, "--pair-budget", pair_budget, "ordered root pairs tried");
    pipeline_flags(sub);
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      std::vector<int> a = v0, b = v1;
      if (a.empty() != b.empty()) throw InvalidInput("give both --v0 and --v1 or neither");
      if (a.empty()) {
        const int h = g.vertex_count() / 2;
        for (int v = 0; v < h; ++v) {
          a.push_back(v);
          b.push_back(h + v);
        }
      }
      const auto r = find_odd_cycle_or_structure(g, to_set(a), to_set(b), n, alpha, pipeline_options(relaxed, m.seed));
      trace("status " + to_string(r.status) + ", pairs tried " + std::to_string(r.pairs_tried));
      o.body = r;
      if (r.status == OddStatus::inconclusive) o.code = kInconclusive;
      if (r.status == OddStatus::gadget_infeasible) o.code = kUsage;
      return o;
    };
  }

  // --- color-lower -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("color-lower", "color a graph with no monochromatic odd C_n");
    static std::string graph, out;
    static int n = 0, r = 2, vertex_cap = 256;
    reg.add(sub, "--graph", graph, "edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--n", n, "odd cycle length")->required();
    reg.add(sub, "--r", r, "number of colors")->required();
    reg.add(sub, "--vertex-cap", vertex_cap, "largest graph the exact verification accepts");
    reg.add(sub, "--out", out, "coloring file", false);
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      const auto a = adversarial_color_odd(g, n, r);
      o.body = a;
      json ver;
      if (g.vertex_count() <= vertex_cap) {
        ver["checked"] = true;
        ver["monochromatic"] = nullptr;
        for (int c = 1; c <= r; ++c) {
          if (auto cyc = find_cycle_exact(a.coloring.color_class(c), n, 0)) {
            ver["monochromatic"] = {{"color", c}, {"cycle", *cyc}};
            break;
          }
        }
      } else {
        ver["checked"] = false;
      }
      o.body["verification"] = ver;
      if (!a.guaranteed && !ver["checked"].get<bool>()) o.code = kInconclusive;
      if (!out.empty()) {
        std::ostringstream col;
        format_coloring(a.coloring, col);
        o.artifact = fs::path(out);
        o.artifact_text = col.str();
      }
      return o;
    };
  }

  // --- peel ------------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("peel", "one level of the multicolor peeling procedure");
    static std::string graph, coloring, halves = "split";
    static int n = 0;
    static double alpha = 0;
    static bool relaxed = false;
    reg.add(sub, "--graph", graph, "host edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--coloring", coloring, "coloring file over the same edges")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--n", n, "odd cycle length")->required();
    reg.add(sub, "--alpha", alpha, "alpha")->required();
    reg.add_flag(sub, "--relaxed", relaxed, "run outside the lemma hypotheses");
    reg.add(sub, "--halves", halves, "split (by id) or random (from --seed)")
        ->check(CLI::IsMember({"split", "random"}));
    reg.add(sub, "--pair-budget", pair_budget, "ordered root pairs tried per step");
    pipeline_flags(sub);
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      const Graph g = load_graph(m, graph);
      m.add_input(coloring);
      const EdgeColoring read = read_coloring(coloring);
      if (read.host().vertex_count() != g.vertex_count() || read.host().edges() != g.edges()) {
        throw InvalidInput("coloring edges differ from the graph edges");
      }
      const EdgeColoring ec(g, std::vector<int>(read.colors().begin(), read.colors().end()), read.num_colors());
      PeelingOptions opt;
      opt.pipeline = pipeline_options(relaxed, m.seed);
      if (halves == "random") opt.halves_seed = m.seed;
      const auto r = run_peeling(g, ec, n, alpha, opt);
      trace("status " + to_string(r.status) + " after " + std::to_string(r.steps.size()) + " steps");
      o.body = r;
      if (r.status == PeelingStatus::inconclusive) o.code = kInconclusive;
      return o;
    };
  }

  // --- oracle ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("oracle", "exact oracles: cycle, cnfree, arrow, gamma");
    static std::string kind, graph;
    static int n = 0, r = 2, vertex_cap = 256, edge_cap = 24;
    sub->add_option("kind", kind, "cycle, cnfree, arrow or gamma")
        ->required()
        ->check(CLI::IsMember({"cycle", "cnfree", "arrow", "gamma"}));
    reg.add(sub, "--graph", graph, "edge-list file")->required()->check(CLI::ExistingFile);
    reg.add(sub, "--n", n, "cycle length")->required();
    reg.add(sub, "--r", r, "number of colors (arrow, gamma)");
    reg.add(sub, "--vertex-cap", vertex_cap, "largest graph the cycle search accepts");
    reg.add(sub, "--edge-cap", edge_cap, "largest edge count an exact search accepts");
    reg.add(sub, "--coloring-cap", coloring_cap, "search nodes allowed in the arrow search");
    runners[sub] = [&](RunManifest& m) {
      Outcome o;
      m.params["kind"] = kind;
      const Graph g = load_graph(m, graph);
      o.body["kind"] = kind;
      if (kind == "cycle") {
        const auto c = find_cycle_exact(g, n, vertex_cap);
        o.body["found"] = c.has_value();
        o.body["cycle"] = c ? json(*c) : json(nullptr);
      } else if (kind == "cnfree") {
        const auto c = max_cnfree_edges(g, n, edge_cap);
        o.body["result"] = c;
        if (!c.exact) o.code = kInconclusive;
      } else if (kind == "arrow") {
        o.body["result"] = arrow_check(g, n, r, edge_cap, coloring_cap);
      } else {
        o.body["result"] = gamma_arrow_check(g, n, r, edge_cap);
      }
      return o;
    };
  }

  // --- bounds ----------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("bounds", "evaluate one of the inequality and constant calculators");
    static std::string formula;
    static double r = 0, n = 0, nprime = 0, p = 0, delta = 0, u = 0, w = 0, mu = 0, ln_r = 0, ln_n = 0;
    static double c1 = 0, c2 = 0, c3 = 0, x = 0, y = 0, lambda = static_cast<double>(kLambda), alpha = 0.033;
    static int d = 59, f = 2, s = 2;
    const std::vector<std::string> formulas = {
        "claim2-aa", "claim2-limit", "claim2-min-n", "claim2-bound", "claim2-step", "ineqA",
        "even-upper", "odd-upper", "hole", "delta-threshold", "delta-odd", "delta-even", "recursion",
        "lower-bound", "chernoff", "h"};
    reg.add(sub, "--formula", formula, "calculator to evaluate")->required()->check(CLI::IsMember(formulas));
    std::map<std::string, CLI::Option*> opts;
    opts["r"] = reg.add(sub, "--r", r, "r", false);
    opts["n"] = reg.add(sub, "--n", n, "n", false);
    opts["nprime"] = reg.add(sub, "--nprime", nprime, "N'", false);
    opts["p"] = reg.add(sub, "--p", p, "edge probability", false);
    opts["delta"] = reg.add(sub, "--delta", delta, "delta", false);
    opts["u"] = reg.add(sub, "--u", u, "|U|", false);
    opts["w"] = reg.add(sub, "--w", w, "|W|", false);
    opts["mu"] = reg.add(sub, "--mu", mu, "mean", false);
    opts["ln-r"] = reg.add(sub, "--ln-r", ln_r, "natural log of r", false);
    opts["ln-n"] = reg.add(sub, "--ln-n", ln_n, "natural log of n", false);
    opts["c1"] = reg.add(sub, "--c1", c1, "c1", false);
    opts["c2"] = reg.add(sub, "--c2", c2, "c2", false);
    opts["c3"] = reg.add(sub, "--c3", c3, "c3", false);
    opts["x"] = reg.add(sub, "--x", x, "x", false);
    opts["y"] = reg.add(sub, "--y", y, "y", false);
    opts["lambda"] = reg.add(sub, "--lambda", lambda, "lambda", false);
    opts["alpha"] = reg.add(sub, "--alpha", alpha, "alpha (recursion)", false);
    opts["d"] = reg.add(sub, "--d", d, "exponent d", false);
    opts["f"] = reg.add(sub, "--f", f, "exponent f", false);
    opts["s"] = reg.add(sub, "--s", s, "recursion level s", false);
    runners[sub] = [&, opts](RunManifest& m) {
      Outcome o;
      auto need = [&](std::initializer_list<const char*> names) {
        for (const char* nm : names) {
          if (opts.at(nm)->count() == 0) throw InvalidInput("--" + std::string(nm) + " is required for formula " + formula);
        }
      };
      // record defaults the formula actually uses
      auto uses = [&](std::initializer_list<const char*> names) {
        const std::map<std::string, json> vals = {{"d", d}, {"f", f}, {"lambda", lambda}, {"alpha", alpha}};
        for (const char* nm : names) {
          if (!m.params.contains(nm)) m.params[nm] = vals.at(nm);
        }
      };
      const Real L = lambda;
      json& b = o.body;
      b["formula"] = formula;
      if (formula == "claim2-aa") {
        need({"n"});
        uses({"lambda"});
        const Real v = claim2_aa_value(n, L);
        b["value"] = real_json(v);
        b["margin"] = real_json(1 - v);
        b["margin_text"] = fmt_real(1 - v);
        b["holds"] = v <= 1;
      } else if (formula == "claim2-limit") {
        uses({"lambda"});
        const Real v = claim2_aa_limit(L);
        b["limit"] = real_json(v);
        b["margin"] = real_json(1 - v);
        b["margin_text"] = fmt_real(1 - v);
        b["below_one"] = v < 1;
      } else if (formula == "claim2-min-n") {
        uses({"lambda"});
        const auto mn = claim2_min_n(L);
        b["min_n"] = mn ? json(*mn) : json(nullptr);
      } else if (formula == "claim2-bound") {
        need({"nprime", "n", "p", "delta"});
        uses({"lambda"});
        b["value"] = real_json(claim2_bound(nprime, n, p, delta, L));
      } else if (formula == "claim2-step") {
        need({"nprime", "n"});
        uses({"lambda"});
        b["step"] = claim2_step_check(nprime, n, L);
      } else if (formula == "ineqA") {
        uses({"d", "f", "lambda"});
        if (opts.at("ln-r")->count() || opts.at("ln-n")->count()) {
          need({"ln-r", "ln-n"});
          b["report"] = ineqA_check_log(ln_r, ln_n, d, f, L);
        } else {
          need({"r", "n"});
          b["report"] = ineqA_check(r, n, d, f, L);
        }
      } else if (formula == "even-upper") {
        need({"r", "n"});
        uses({"d", "f"});
        b["constant"] = even_upper_constant(r, n, d, f);
      } else if (formula == "odd-upper") {
        need({"r"});
        const int ri = static_cast<int>(r);
        const LogScalar v = odd_upper_constant(ri);
        b["value"] = v;
        b["ratio_to_2^(16r^2)"] = real_json((v / LogScalar::from_log(16.0L * ri * ri * std::log(2.0L))).to_real());
      } else if (formula == "hole") {
        need({"u", "w", "p", "delta"});
        b["value"] = real_json(hole_bound(u, w, p, delta));
      } else if (formula == "delta-threshold") {
        need({"c1", "c2", "c3"});
        b["threshold"] = delta_threshold(c1, c2, c3);
      } else if (formula == "delta-odd") {
        need({"r"});
        b["report"] = odd_delta_report(static_cast<int>(r));
      } else if (formula == "delta-even") {
        need({"r"});
        uses({"d", "f"});
        b["report"] = even_delta_report(r, d, f);
      } else if (formula == "recursion") {
        need({"s"});
        uses({"alpha"});
        b["check"] = peeling_recursion_check(s, alpha);
      } else if (formula == "lower-bound") {
        need({"n", "r"});
        b["value"] = lower_bound_value(static_cast<long>(n), static_cast<int>(r));
        b["constructive_threshold"] = constructive_threshold(static_cast<long>(n), static_cast<int>(r));
        b["caveat"] = kLowerBoundCaveat;
      } else if (formula == "chernoff") {
        need({"mu", "delta"});
        b["bound"] = chernoff_bound(mu, delta);
      } else if (formula == "h") {
        need({"x", "y", "c1", "c2", "delta"});
        b["value"] = h_function(x, y, c1, c2, delta);
        b["gradient"] = h_gradient(x, y, c1, c2, delta);
      }
      return o;
    };
  }

  // --- scan ------------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("scan", "parameter sweeps as CSV");
    static std::string formula, lambda_range, s_range, r_range, ln_r_range, out;
    static double n = 0, p = 0, ln_n = 0;
    reg.add(sub, "--formula", formula, "claim2-aa, chernoff, recursion, ineqA, lower-bound or delta-odd")
        ->required()
        ->check(CLI::IsMember({"claim2-aa", "chernoff", "recursion", "ineqA", "lower-bound", "delta-odd"}));
    auto* o_lambda = reg.add(sub, "--lambda", lambda_range, "lo:hi:step (claim2-aa)", false);
    auto* o_s = reg.add(sub, "--s", s_range, "lo:hi (recursion)", false);
    auto* o_r = reg.add(sub, "--r", r_range, "lo:hi[:step] (lower-bound, delta-odd)", false);
    auto* o_lnr = reg.add(sub, "--ln-r", ln_r_range, "lo:hi:step (ineqA)", false);
    auto* o_n = reg.add(sub, "--n", n, "trials (chernoff) or cycle length (lower-bound)", false);
    auto* o_p = reg.add(sub, "--p", p, "success probability (chernoff)", false);
    auto* o_lnn = reg.add(sub, "--ln-n", ln_n, "natural log of n (ineqA)", false);
    reg.add(sub, "--out", out, "CSV file (default: standard output)", false);
    runners[sub] = [&, o_lambda, o_s, o_r, o_lnr, o_n, o_p, o_lnn](RunManifest&) {
      Outcome o;
      auto need = [&](CLI::Option* opt) {
        if (opt->count() == 0) throw InvalidInput(opt->get_name() + " is required for scan " + formula);
      };
      std::vector<std::string> columns;
      std::vector<std::vector<std::string>> rows;
      json extra = json::object();
      if (formula == "claim2-aa") {
        need(o_lambda);
        const Range rg = parse_range(lambda_range, "--lambda");
        const auto scan = claim2_scan(rg.lo, rg.hi, rg.step);
        columns = {"lambda", "limit", "margin"};
        for (const auto& row : scan) rows.push_back({fmt_real(row.lambda, 10), fmt_real(row.limit), fmt_real(row.margin)});
        extra["sign_changes"] = sign_changes(scan);
      } else if (formula == "chernoff") {
        need(o_n);
        need(o_p);
        const int trials = static_cast<int>(n);
        const double mu = trials * p;
        columns = {"t", "mu", "delta", "exact_tail", "chernoff", "dominated"};
        for (int t = 1; t <= trials && t <= 1.5 * mu; ++t) {
          const double dl = t / mu;
          const double tail = binomial_two_sided_tail(trials, p, t);
          const double bound = chernoff_bound(mu, dl);
          rows.push_back({std::to_string(t), fmt_real(mu), fmt_real(dl), fmt_real(tail), fmt_real(bound),
                          bound > tail ? "1" : "0"});
        }
      } else if (formula == "recursion") {
        need(o_s);
        columns = {"s", "lhs_log2", "rhs_log2", "holds"};
        for (Real sv : range_points(parse_range(s_range, "--s"))) {
          const auto c = peeling_recursion_check(static_cast<int>(std::lround(static_cast<double>(sv))));
          rows.push_back({std::to_string(c.s), fmt_real(c.lhs_log2), fmt_real(c.rhs_log2), c.holds ? "1" : "0"});
        }
      } else if (formula == "ineqA") {
        need(o_lnr);
        need(o_lnn);
        columns = {"ln_r", "delta", "margin_sign", "margin_log_magnitude", "contradiction"};
        for (Real lr : range_points(parse_range(ln_r_range, "--ln-r"))) {
          const auto rep = ineqA_check_log(lr, ln_n);
          rows.push_back({fmt_real(lr), fmt_real(rep.delta), std::to_string(rep.margin.sign()),
                          rep.margin.sign() == 0 ? "" : fmt_real(rep.margin.log_magnitude()),
                          rep.contradiction ? "1" : "0"});
        }
      } else if (formula == "lower-bound") {
        need(o_r);
        need(o_n);
        columns = {"r", "lower_bound", "constructive_threshold"};
        for (Real rv : range_points(parse_range(r_range, "--r"))) {
          const int ri = static_cast<int>(std::lround(static_cast<double>(rv)));
          rows.push_back({std::to_string(ri), fmt_real(lower_bound_value(static_cast<long>(n), ri)),
                          fmt_real(constructive_threshold(static_cast<long>(n), ri))});
        }
      } else if (formula == "delta-odd") {
        need(o_r);
        columns = {"r", "threshold", "coarse", "admissible"};
        for (Real rv : range_points(parse_range(r_range, "--r"))) {
          const auto rep = odd_delta_report(static_cast<int>(std::lround(static_cast<double>(rv))));
          rows.push_back({fmt_real(rv), fmt_real(rep.threshold), fmt_real(rep.coarse), rep.admissible ? "1" : "0"});
        }
      }
      std::string csv;
      for (std::size_t i = 0; i < columns.size(); ++i) csv += (i ? "," : "") + columns[i];
      csv += '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) csv += (i ? "," : "") + row[i];
        csv += '\n';
      }
      for (const auto& [k, v] : extra.items()) csv += "# " + k + " " + v.dump() + '\n';
      o.body["formula"] = formula;
      o.body["columns"] = columns;
      o.body["rows"] = rows;
      for (const auto& [k, v] : extra.items()) o.body[k] = v;
      if (!out.empty()) {
        o.artifact = fs::path(out);
        o.artifact_text = csv;
        o.body.erase("rows");
        o.body["out"] = out;
      } else if (!json_out) {
        o.plain = csv;
      }
      return o;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunManifest manifest;
  manifest.subcommand = sub->get_name();
  manifest.params = reg.collect(sub);
  manifest.seed = seed;
  manifest.version = CYCRAM_VERSION;
  manifest.started_at = cli::utc_timestamp(std::chrono::system_clock::now());

  Outcome out;
  try {
    out = runners.at(sub)(manifest);
  } catch (const CapExceeded& e) {
    out.body = {{"status", "cap-exceeded"}, {"detail", e.what()}};
    out.code = kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (json_out) {
      manifest.finished_at = cli::utc_timestamp(std::chrono::system_clock::now());
      json doc;
      doc["manifest"] = manifest.to_json();
      doc["error"] = {{"message", e.what()}};
      std::cout << doc.dump(2) << '\n';
    }
    return kUsage;
  }
  manifest.finished_at = cli::utc_timestamp(std::chrono::system_clock::now());
  const json mj = manifest.to_json();

  if (out.artifact) {
    std::ofstream f(*out.artifact, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out.artifact->string() << '\n';
      return kUsage;
    }
    f << "# manifest " << mj.dump() << '\n' << out.artifact_text;
    trace("wrote " + out.artifact->string());
  }
  if (json_out) {
    json doc;
    doc["manifest"] = mj;
    doc["result"] = out.body;
    doc["exit_code"] = out.code;
    std::cout << doc.dump(2) << '\n';
  } else if (out.plain) {
    std::cout << "# manifest " << mj.dump() << '\n' << *out.plain;
  } else {
    print_listing(out.body);
  }
  return out.code;
}
