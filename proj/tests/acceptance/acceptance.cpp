// Acceptance suite: one check per criterion, one output line each.
//
//   cycram_acceptance [--cli PATH] [--data DIR] [N ...]
//
// With no numbers every criterion runs. Exit status is nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../oracles.hpp"
#include "cycram/bounds.hpp"
#include "cycram/embed.hpp"
#include "cycram/expander.hpp"
#include "cycram/gadgets.hpp"
#include "cycram/numeric.hpp"
#include "cycram/ramsey.hpp"
#include "cycram/random_models.hpp"

using namespace cycram;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Config {
  fs::path cli;
  fs::path data;
};

std::string fmt(long double x, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

// --- 1 ---------------------------------------------------------------------

Outcome aa_reproduction(const Config&) {
  // reference margins 1 - limit(lambda) at 40 digits
  struct Ref {
    long double lambda;
    long double margin;
  };
  const Ref refs[] = {{0.010L, 0.003465034657845971116811479L},
                      {0.017L, 0.00004720359055173320785609311L},
                      {0.018L, -0.0004450289130895953355605016L},
                      {0.030L, -0.00643049190899510255933018L}};
  long double worst_rel = 0;
  for (const auto& r : refs) {
    const long double m = 1 - claim2_aa_limit(r.lambda);
    worst_rel = std::max(worst_rel, std::fabs(m - r.margin) / std::fabs(r.margin));
  }
  const bool below = claim2_aa_limit(0.017L) < 1;
  const bool above = claim2_aa_limit(0.03L) > 1;
  const auto rows = claim2_scan(0.010L, 0.030L, 0.001L);
  const int changes = sign_changes(rows);
  Outcome o;
  o.pass = below && above && changes == 1 && worst_rel < 1e-10L;
  o.detail = "limit(0.017)=" + fmt(claim2_aa_limit(0.017L), 20) +
             " limit(0.03)=" + fmt(claim2_aa_limit(0.03L), 12) +
             " sign_changes=" + std::to_string(changes) +
             " worst_rel_margin_error=" + fmt(worst_rel, 3);
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome ineq_a(const Config&) {
  const auto big = ineqA_check(1e6L, 1e8L, 59, 2, 0.017L);
  const auto small = ineqA_check(2, 1e8L, 59, 2, 0.017L);
  const bool small_reported = !small.note.empty() && !small.delta_below_one;
  Outcome o;
  o.pass = big.contradiction && small_reported;
  o.detail = "r=1e6,n=1e8: lhs=" + big.lhs.to_string(15) + " rhs=" + big.rhs.to_string(15) +
             " margin=" + big.margin.to_string(6) + (big.contradiction ? " (lhs>rhs)" : " (lhs<=rhs)") +
             "; r=2: delta=" + fmt(small.delta, 6) + " lhs=" + small.lhs.to_string(6) +
             " rhs=" + small.rhs.to_string(6) + " reported without conclusion";
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome chernoff(const Config&) {
  long cases = 0, exceptions = 0;
  std::string first;
  for (int n = 1; n <= 25; ++n) {
    for (int pi = 1; pi <= 9; ++pi) {
      const long double p = pi / 10.0L;
      const double mu = static_cast<double>(n * p);
      for (int t = 1; t <= n; ++t) {
        const double delta = t / mu;
        if (delta > 1.5) break;
        ++cases;
        const long double tail = oracle::binomial_tail(n, p, t);
        if (!(chernoff_bound(mu, delta) > tail)) {
          if (exceptions++ == 0) {
            first = " first: n=" + std::to_string(n) + " p=" + fmt(p, 2) + " t=" + std::to_string(t);
          }
        }
      }
    }
  }
  return {exceptions == 0 && cases > 0,
          std::to_string(cases) + " cases, " + std::to_string(exceptions) + " exceptions" + first};
}

// --- 4 ---------------------------------------------------------------------

Outcome h_machinery(const Config&) {
  CounterRng rng(2024);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double c1 = 2 + 60 * rng.next_unit();
    const double c2 = 0.5 + 10 * rng.next_unit();
    const double delta = 0.05 + 1.4 * rng.next_unit();
    const double x = 0.2 + (c1 - 0.2) * rng.next_unit();
    const double y = 0.2 + (c1 - 0.2) * rng.next_unit();
    const auto g = h_gradient(x, y, c1, c2, delta);
    const std::vector<double> at{x, y};
    const auto fd = finite_diff(
        [&](std::span<const double> p) { return h_function(p[0], p[1], c1, c2, delta); }, at, 1e-6);
    for (int k = 0; k < 2; ++k) {
      const double rel = std::fabs(g[k] - fd[k]) / std::max(1.0, std::fabs(g[k]));
      worst = std::max(worst, rel);
    }
  }
  int grid = 0, bad = 0;
  const double c1 = 64;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double c2 = 0.5 + i * 2.0;
      const double c3 = 0.25 + j * 0.5;
      const double th = delta_threshold(c1, c2, c3);
      for (double factor : {1.0001, 1.1, 2.0}) {
        ++grid;
        if (!(h_function(c3, c3, c1, c2, th * factor) < 0)) ++bad;
      }
    }
  }
  return {worst < 1e-5 && bad == 0,
          "max gradient rel error " + fmt(worst, 3) + " over 100 points; h(c3,c3)<0 at " +
              std::to_string(grid - bad) + "/" + std::to_string(grid) + " grid points"};
}

// --- 5, 6 --------------------------------------------------------------------

Outcome joined_reduction(const Config&) {
  int agree = 0, joined = 0;
  const double alphas[] = {0.2, 0.25, 0.3, 1.0 / 3};
  for (int i = 0; i < 500; ++i) {
    const int big_n = 4 + i % 9;
    const double alpha = alphas[(i / 9) % 4];
    const double p = 0.2 + 0.6 * ((i * 37) % 100) / 100.0;
    const Graph g = oracle::random_bipartite(big_n, big_n, p, 5000 + i);
    const auto r = is_alpha_joined(g, alpha);
    const bool truth = oracle::joined_full(g, alpha);
    joined += truth;
    bool ok = (r.verdict == JoinedVerdict::joined) == truth;
    if (r.witness) ok = ok && edges_between(g, r.witness->a, r.witness->b) == 0;
    agree += ok;
  }
  return {agree == 500, std::to_string(agree) + "/500 agree (" + std::to_string(joined) +
                            " joined, " + std::to_string(500 - joined) + " not joined)"};
}

Outcome extraction(const Config&) {
  const double alpha = 0.25;
  int instances = 0, ok = 0, with_deletions = 0;
  std::uint64_t seed = 90000;
  while (instances < 500) {
    const int big_n = 4 + instances % 9;
    const double p = 0.3 + 0.4 * ((seed * 13) % 10) / 10.0;
    const Graph g = oracle::random_bipartite(big_n, big_n, p, seed++);
    if (!oracle::joined_full(g, alpha)) continue;
    ++instances;
    const auto x = extract_expander(g, alpha);
    with_deletions += !x.log.deleted.empty();
    const bool survivors = static_cast<double>(x.log.survivors[0].size()) >= (1 - alpha) * big_n - 1e-9 &&
                           static_cast<double>(x.log.survivors[1].size()) >= (1 - alpha) * big_n - 1e-9;
    const auto rep = verify_expansion(x.expander, alpha, big_n);
    const auto truth = oracle::expansion_full(x.expander, alpha, big_n);
    ok += survivors && x.log.claim1_holds && rep.passed() && truth.c1 && truth.c2 && truth.c3;
  }
  return {ok == 500, std::to_string(ok) + "/500 pass (" + std::to_string(with_deletions) +
                         " needed deletions)"};
}

// --- 7 -----------------------------------------------------------------------

Outcome gadgets(const Config&) {
  long even = 0, odd = 0, bad = 0;
  for (int n = 3; n <= 30; ++n) {
    for (int L = 1; L <= 16; ++L) {
      const int h = ceil_log2(L);
      if (n % 2 == 0) {
        if (n - 1 - 2 * h < 1) continue;
        ++even;
        const auto t = build_even_gadget(n, L);
        const Graph tg = t.as_graph();
        const auto& m = *t.marks();
        if (t.vertex_count() > 4 * L + n || m[0].size() != static_cast<std::size_t>(L) ||
            m[1].size() != static_cast<std::size_t>(L) || t.max_degree() > 3) {
          ++bad;
          continue;
        }
        for (Vertex x0 : m[0]) {
          const auto d = oracle::bfs_distances(tg, x0);
          for (Vertex x1 : m[1]) bad += d[x1] != n - 1;
        }
      } else {
        if (n - 2 - 2 * h < 1) continue;
        ++odd;
        const auto g = build_odd_gadgets(n, L);
        const auto d0 = oracle::bfs_distances(g.t0.as_graph(), g.t0.root());
        const auto d1 = oracle::bfs_distances(g.t1.as_graph(), g.t1.root());
        const auto& x0 = (*g.t0.marks())[0];
        const auto& x1 = (*g.t1.marks())[1];
        if (g.t0.vertex_count() + g.t1.vertex_count() > 4 * L + n ||
            x0.size() != static_cast<std::size_t>(L) || x1.size() != static_cast<std::size_t>(L) ||
            g.t0.max_degree() > 3 || g.t1.max_degree() > 3 || x1.contains(g.t1.root())) {
          ++bad;
          continue;
        }
        if (g.t0.height() % 2 == g.t1.height() % 2) ++bad;
        for (Vertex u0 : x0) {
          for (Vertex u1 : x1) bad += d0[u0] + d1[u1] != n - 2;
        }
      }
    }
  }
  return {bad == 0, std::to_string(even) + " even and " + std::to_string(odd) +
                        " odd (n, L) pairs, " + std::to_string(bad) + " contract violations"};
}

// --- 8 -----------------------------------------------------------------------

Outcome even_pipeline(const Config&) {
  const double alpha = 0.25;
  const int n = 8;
  PipelineOptions opt;
  opt.relaxed = true;
  int instances = 0, cycles = 0, invalid = 0, crossing = 0;
  std::uint64_t seed = 70000;
  while (instances < 50) {
    const int big_n = 12 + instances % 5;
    const Graph g = oracle::random_bipartite(big_n, big_n, 0.8, seed++);
    if (!oracle::joined_full(g, alpha)) continue;
    ++instances;
    const auto r = find_even_cycle(g, n, alpha, opt);
    crossing += r.status == EvenStatus::no_crossing_edge;
    if (r.status != EvenStatus::cycle) continue;
    ++cycles;
    const bool valid = is_cycle_of_length(g, r.cycle, n) && find_cycle_exact(g, n).has_value() &&
                       oracle::has_cycle(g, n);
    invalid += !valid;
  }
  return {cycles * 10 >= instances * 8 && invalid == 0 && crossing == 0,
          std::to_string(cycles) + "/50 cycles, " + std::to_string(invalid) + " invalid, " +
              std::to_string(crossing) + " no-crossing-edge results"};
}

// --- 9 -----------------------------------------------------------------------

Outcome adversarial(const Config&) {
  int exceptions = 0, not_guaranteed = 0;
  CounterRng rng(31337);
  for (int i = 0; i < 1000; ++i) {
    const int r = 2 + i % 2;
    const int n = 5 + 2 * ((i / 2) % 2);
    const int limit = (1 << (r - 1)) * (n - 1);
    const int v = 5 + static_cast<int>(rng.below(12));
    std::vector<Edge> all;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) all.push_back({a, b});
    }
    rng.shuffle(all);
    const int e = static_cast<int>(rng.below(std::min<std::size_t>(limit, all.size()) + 1));
    all.resize(e);
    const Graph h = Graph::from_edges(v, all);
    const auto col = adversarial_color_odd(h, n, r);
    not_guaranteed += !col.guaranteed;
    for (int c = 1; c <= r; ++c) exceptions += oracle::has_cycle(col.coloring.color_class(c), n);
  }
  return {exceptions == 0 && not_guaranteed == 0,
          "1000 graphs, " + std::to_string(exceptions) + " monochromatic C_n, " +
              std::to_string(not_guaranteed) + " without the guarantee flag"};
}

// --- 10 ----------------------------------------------------------------------

Outcome arrow_sanity(const Config&) {
  const bool k6 = arrow_check(families::complete(6), 3, 2).holds;
  const auto k5 = arrow_check(families::complete(5), 3, 2);
  bool witness_ok = !k5.holds && k5.witness.has_value();
  if (witness_ok) {
    for (int c = 1; c <= 2; ++c) witness_ok = witness_ok && !oracle::has_cycle(k5.witness->color_class(c), 3);
  }
  int checked = 0, wrong = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_bipartite(2 + i % 5, 2 + (i / 5) % 5, 0.5, 400 + i);
    if (g.edge_count() > 20) continue;
    for (int n : {3, 5, 7}) {
      for (int r : {2, 3, 4}) {
        ++checked;
        wrong += gamma_arrow_check(g, n, r).holds;
      }
    }
  }
  return {k6 && witness_ok && wrong == 0,
          std::string("K6->(C3)_2 ") + (k6 ? "true" : "false") + ", K5 witness " +
              (witness_ok ? "verified" : "missing") + ", gamma false on " +
              std::to_string(checked - wrong) + "/" + std::to_string(checked) + " bipartite cases"};
}

// --- 11 ----------------------------------------------------------------------

Outcome constants(const Config&) {
  const auto e = even_upper_constant(3, 1000, 59, 2);
  long double worst = 0;
  for (int r = 2; r <= 6; ++r) {
    const LogScalar ratio =
        odd_upper_constant(r) / LogScalar::from_log(16.0L * r * r * std::log(2.0L));
    const long double want = 8.0L * r * r;
    worst = std::max(worst, std::fabs(ratio.to_real() - want) / want);
  }
  return {e.exponent == 120 && worst < 1e-12L,
          "exponent " + std::to_string(e.exponent) + ", worst relative error of 8r^2 ratio " +
              fmt(worst, 3)};
}

// --- 12 ----------------------------------------------------------------------

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

void strip_timestamps(nlohmann::ordered_json& j) {
  if (j.is_object()) {
    j.erase("started_at");
    j.erase("finished_at");
    for (auto& [k, v] : j.items()) strip_timestamps(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timestamps(v);
  }
}

// JSON documents lose their timestamps; '# manifest ' lines in CSV and
// edge-list artifacts are treated the same way.
std::string normalize(const std::string& text) {
  auto parsed = nlohmann::ordered_json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) {
    strip_timestamps(parsed);
    return parsed.dump();
  }
  std::istringstream in(text);
  std::string line, out;
  const std::string tag = "# manifest ";
  while (std::getline(in, line)) {
    if (line.rfind(tag, 0) == 0) {
      auto m = nlohmann::ordered_json::parse(line.substr(tag.size()), nullptr, false);
      if (!m.is_discarded()) {
        strip_timestamps(m);
        line = tag + m.dump();
      }
    }
    out += line + '\n';
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome determinism(const Config& cfg) {
  if (cfg.cli.empty() || !fs::exists(cfg.cli)) return {false, "CLI binary not found (pass --cli)"};
  if (cfg.data.empty() || !fs::exists(cfg.data)) return {false, "corpus directory not found (pass --data)"};
  std::vector<std::string> graphs, bipartite, colorings;
  for (const auto& entry : fs::directory_iterator(cfg.data)) {
    const auto name = entry.path().filename().string();
    if (name.ends_with(".col")) colorings.push_back(entry.path().string());
    else if (name.ends_with(".el")) (name.rfind("bip", 0) == 0 ? bipartite : graphs).push_back(entry.path().string());
  }
  std::sort(graphs.begin(), graphs.end());
  std::sort(bipartite.begin(), bipartite.end());
  std::sort(colorings.begin(), colorings.end());

  const fs::path tmp = fs::temp_directory_path() / "cycram_acceptance_12";
  fs::create_directories(tmp);
  std::vector<std::string> cmds;
  const std::string cli = "\"" + cfg.cli.string() + "\"";
  auto add = [&](const std::string& args) { cmds.push_back(cli + " " + args); };

  add("gen --model bipartite --c1 4 --n 3 --c2 1.5 --seed 11 --out \"" + (tmp / "gen.el").string() + "\" --json");
  add("gen --model graph --c1 6 --n 3 --c2 1.2 --seed 12 --out \"" + (tmp / "gen.el").string() + "\" --json");
  add("gadget --kind even --n 12 --leaves 5 --json");
  add("gadget --kind odd --n 13 --leaves 3 --json");
  add("gadget --kind binary --leaves 6 --json");
  for (const char* f : {"claim2-aa --n 1000", "claim2-limit", "claim2-min-n", "claim2-bound --nprime 9000 --n 1000 --p 0.01 --delta 0.1",
                        "ineqA --r 1000000 --n 100000000", "ineqA --r 2 --n 100000000",
                        "even-upper --r 3 --n 1000 --d 59 --f 2", "odd-upper --r 3", "hole --u 4 --w 4 --p 0.5 --delta 0.2",
                        "delta-odd --r 2", "delta-even --r 1000000", "recursion --s 4", "lower-bound --n 101 --r 3",
                        "chernoff --mu 6 --delta 0.5"}) {
    add(std::string("bounds --formula ") + f + " --json");
  }
  add("scan --formula claim2-aa --lambda 0.010:0.030:0.001");
  add("scan --formula chernoff --n 20 --p 0.3");
  for (const auto& g : bipartite) {
    add("density --graph \"" + g + "\" --c1 3 --n 4 --c2 2 --c3 0.75 --delta 0.6 --json");
    add("density --graph \"" + g + "\" --c1 3 --n 4 --c2 2 --c3 0.75 --delta 0.6 --mode sampled --budget 500 --seed 5 --json");
    add("joined --graph \"" + g + "\" --alpha 0.25 --json");
    add("joined --graph \"" + g + "\" --alpha 0.25 --mode sampled --budget 300 --seed 9 --json");
    add("expand --graph \"" + g + "\" --alpha 0.25 --json");
    add("embed --graph \"" + g + "\" --n 9 --leaves 2 --roots 0,1 --json");
    add("cycle-even --graph \"" + g + "\" --n 8 --alpha 0.25 --relaxed --json");
    add("oracle cycle --graph \"" + g + "\" --n 6 --json");
  }
  for (const auto& g : graphs) {
    add("cycle-odd --graph \"" + g + "\" --n 7 --alpha 0.25 --relaxed --json");
    add("color-lower --graph \"" + g + "\" --n 5 --r 2 --json");
    add("oracle cycle --graph \"" + g + "\" --n 5 --json");
    add("oracle cnfree --graph \"" + g + "\" --n 4 --json");
  }
  for (const auto& c : colorings) {
    const std::string g = c.substr(0, c.size() - 4) + ".el";
    add("peel --graph \"" + g + "\" --coloring \"" + c + "\" --n 7 --alpha 0.25 --relaxed --json");
  }
  const fs::path k6 = cfg.data / "k6.el";
  const fs::path k5 = cfg.data / "k5.el";
  add("oracle arrow --graph \"" + k6.string() + "\" --n 3 --r 2 --json");
  add("oracle arrow --graph \"" + k5.string() + "\" --n 3 --r 2 --json");
  add("oracle gamma --graph \"" + k5.string() + "\" --n 3 --r 2 --json");

  int mismatched = 0, failed = 0;
  std::string first;
  for (const auto& cmd : cmds) {
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(cmd, s1);
    const std::string gen_a = fs::exists(tmp / "gen.el") ? slurp(tmp / "gen.el") : "";
    const std::string b = run_capture(cmd, s2);
    const std::string gen_b = fs::exists(tmp / "gen.el") ? slurp(tmp / "gen.el") : "";
    const int code = WIFEXITED(s1) ? WEXITSTATUS(s1) : -1;
    if (code != 0 && code != 2) {
      if (failed++ == 0 && first.empty()) first = " first failure: " + cmd;
      continue;
    }
    if (a.empty() || s1 != s2 || normalize(a) != normalize(b) || normalize(gen_a) != normalize(gen_b)) {
      if (mismatched++ == 0 && first.empty()) first = " first mismatch: " + cmd;
    }
  }
  fs::remove_all(tmp);
  return {mismatched == 0 && failed == 0,
          std::to_string(cmds.size()) + " invocations, " + std::to_string(mismatched) +
              " mismatches, " + std::to_string(failed) + " errors" + first};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome(const Config&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) {
      cfg.cli = argv[++i];
    } else if (a == "--data" && i + 1 < argc) {
      cfg.data = argv[++i];
    } else {
      try {
        selected.push_back(std::stoi(a));
      } catch (const std::exception&) {
        std::cerr << "usage: cycram_acceptance [--cli PATH] [--data DIR] [N ...]\n";
        return 1;
      }
    }
  }

  const std::vector<Criterion> all = {
      {1, "inequality (aa) reproduction", 1, aa_reproduction},
      {2, "(ineq.A) contradiction at r=1e6, n=1e8", 1, ineq_a},
      {3, "Chernoff domination", 10, chernoff},
      {4, "h(x,y) gradient and sign", 5, h_machinery},
      {5, "alpha-joined boundary reduction", 120, joined_reduction},
      {6, "expander extraction", 300, extraction},
      {7, "gadget contracts", 10, gadgets},
      {8, "even-cycle pipeline", 600, even_pipeline},
      {9, "adversarial coloring guarantee", 300, adversarial},
      {10, "arrow oracle sanity", 120, arrow_sanity},
      {11, "constant calculators", 1, constants},
      {12, "CLI determinism", 600, determinism},
  };

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(cfg);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d: %s  %s | %s | %.2fs%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, in_time ? "" : " (over time budget)");
  }
  return failures == 0 ? 0 : 1;
}
