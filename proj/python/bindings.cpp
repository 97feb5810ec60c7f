#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycram/bounds.hpp"
#include "cycram/embed.hpp"
#include "cycram/errors.hpp"
#include "cycram/expander.hpp"
#include "cycram/gadgets.hpp"
#include "cycram/graph_io.hpp"
#include "cycram/ramsey.hpp"
#include "cycram/random_models.hpp"
#include "cycram/serialize.hpp"

namespace py = pybind11;
using namespace cycram;

namespace {

// Results cross the boundary as plain dicts, built from the same JSON the CLI emits.
py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

template <class T>
py::object dict_of(const T& value) {
  return to_py(json(value));
}

std::vector<Edge> edge_list(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return edges;
}

ParamSet params(long c1, long n, double c2, double c3, double eps, double delta) {
  ParamSet p;
  p.c1 = c1;
  p.n = n;
  p.c2 = c2;
  p.c3 = c3;
  p.eps = eps;
  p.delta = delta;
  return p;
}

SearchMode search_mode(const std::string& s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "sampled") return SearchMode::sampled;
  if (s == "auto") return SearchMode::automatic;
  throw InvalidInput("mode must be exhaustive, sampled or auto");
}

PipelineOptions pipeline(bool relaxed, std::uint64_t embed_budget) {
  PipelineOptions opt;
  opt.relaxed = relaxed;
  opt.joined.mode = SearchMode::automatic;
  opt.extract.strategy = ExtractStrategy::automatic;
  opt.embed_budget = embed_budget;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core routines of the cycram toolkit";

  static py::exception<Error> base(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotBipartite>(m, "NotBipartite", base.ptr());
  py::register_exception<InfeasibleParameters>(m, "InfeasibleParameters", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                       std::optional<std::vector<std::uint8_t>> labels) {
             const auto e = edge_list(edges);
             return Graph::from_edges(n, e, std::move(labels));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{}, py::arg("labels") = py::none())
      .def_static("bipartite", [](int n0, int n1, const std::vector<std::pair<int, int>>& edges) {
        const auto e = edge_list(edges);
        return Graph::bipartite(n0, n1, e);
      })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("is_labeled", &Graph::is_labeled)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("part", &Graph::part)
      .def("to_dict", [](const Graph& g) { return dict_of(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
      });

  m.def("read_graph", [](const std::string& path) { return read_graph(path); });
  m.def("write_graph", [](const Graph& g, const std::string& path) { write_graph(g, path); });
  m.def("complete", &families::complete);
  m.def("complete_bipartite", &families::complete_bipartite);
  m.def("cycle", &families::cycle);
  m.def("path", &families::path);
  m.def("petersen", &families::petersen);

  // random models
  m.def("sample_bipartite",
        [](long c1, long n, double c2, std::uint64_t seed) { return sample_bipartite(params(c1, n, c2, 1, 0.25, 1), seed); },
        py::arg("c1"), py::arg("n"), py::arg("c2"), py::arg("seed") = 0);
  m.def("sample_graph",
        [](long c1, long n, double c2, std::uint64_t seed) { return sample_graph(params(c1, n, c2, 1, 0.25, 1), seed); },
        py::arg("c1"), py::arg("n"), py::arg("c2"), py::arg("seed") = 0);
  m.def("chernoff_bound", &chernoff_bound, py::arg("mu"), py::arg("delta"));
  m.def("binomial_two_sided_tail", &binomial_two_sided_tail, py::arg("n"), py::arg("p"), py::arg("threshold"));
  m.def("delta_threshold", &delta_threshold, py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def("h_function", &h_function, py::arg("x"), py::arg("y"), py::arg("c1"), py::arg("c2"), py::arg("delta"));
  m.def("h_gradient", &h_gradient, py::arg("x"), py::arg("y"), py::arg("c1"), py::arg("c2"), py::arg("delta"));
  m.def(
      "verify_density",
      [](const Graph& g, long c1, long n, double c2, double c3, double delta, const std::string& model,
         const std::string& mode, std::uint64_t budget, std::uint64_t seed) {
        DensityOptions opt;
        opt.mode = mode == "sampled" ? DensityMode::sampled
                   : mode == "all-sizes" ? DensityMode::all_sizes
                                         : DensityMode::min_size;
        opt.budget = budget;
        opt.seed = seed;
        return dict_of(verify_density(g, params(c1, n, c2, c3, 0.25, delta),
                                      model == "graph" ? Model::graph : Model::bipartite, opt));
      },
      py::arg("g"), py::arg("c1"), py::arg("n"), py::arg("c2"), py::arg("c3"), py::arg("delta"),
      py::arg("model") = "bipartite", py::arg("mode") = "min-size", py::arg("budget") = 10000, py::arg("seed") = 0);

  // expanders
  m.def(
      "is_alpha_joined",
      [](const Graph& g, double alpha, const std::string& mode, std::uint64_t budget, std::uint64_t seed) {
        JoinedOptions opt;
        opt.mode = search_mode(mode);
        opt.budget = budget;
        opt.seed = seed;
        return dict_of(is_alpha_joined(g, alpha, opt));
      },
      py::arg("g"), py::arg("alpha"), py::arg("mode") = "exhaustive", py::arg("budget") = 20000, py::arg("seed") = 0);
  m.def(
      "extract_expander",
      [](const Graph& g, double alpha) {
        auto x = extract_expander(g, alpha);
        py::dict out;
        out["expander"] = py::cast(x.expander);
        out["original"] = py::cast(x.original);
        out["log"] = dict_of(x.log);
        return out;
      },
      py::arg("g"), py::arg("alpha"));
  m.def(
      "verify_expansion",
      [](const Graph& g, double alpha, int big_n) { return dict_of(verify_expansion(g, alpha, big_n)); },
      py::arg("g"), py::arg("alpha"), py::arg("big_n"));

  // gadgets and embedding
  m.def("build_binary_tree", [](long leaves) { return dict_of(build_binary_tree(leaves)); }, py::arg("leaves"));
  m.def("build_even_gadget", [](long n, long leaves) { return dict_of(build_even_gadget(n, leaves)); },
        py::arg("n"), py::arg("leaves"));
  m.def("build_odd_gadgets", [](long n, long leaves) { return dict_of(build_odd_gadgets(n, leaves)); },
        py::arg("n"), py::arg("leaves"));
  m.def(
      "embed_even_gadget",
      [](const Graph& host, long n, long leaves, int root, std::uint64_t budget) {
        std::vector<PlantedTree> trees{{root, build_even_gadget(n, leaves)}};
        const auto r = embed_forest(make_embed_spec(host, trees, 1), budget);
        py::dict out = dict_of(r);
        if (r.success) out["valid"] = validate_embedding(host, trees, r.embedding).ok;
        return out;
      },
      py::arg("host"), py::arg("n"), py::arg("leaves"), py::arg("root"), py::arg("budget") = 1'000'000);

  // cycle pipelines and oracles
  m.def(
      "find_even_cycle",
      [](const Graph& g, int n, double alpha, bool relaxed, std::uint64_t embed_budget) {
        return dict_of(find_even_cycle(g, n, alpha, pipeline(relaxed, embed_budget)));
      },
      py::arg("g"), py::arg("n"), py::arg("alpha"), py::arg("relaxed") = false, py::arg("embed_budget") = 1'000'000);
  m.def(
      "find_odd_cycle_or_structure",
      [](const Graph& g, std::vector<int> v0, std::vector<int> v1, int n, double alpha, bool relaxed) {
        return dict_of(find_odd_cycle_or_structure(g, VertexSet(std::move(v0)), VertexSet(std::move(v1)), n, alpha,
                                                   pipeline(relaxed, 1'000'000)));
      },
      py::arg("g"), py::arg("v0"), py::arg("v1"), py::arg("n"), py::arg("alpha"), py::arg("relaxed") = false);
  m.def("find_cycle_exact", [](const Graph& g, int n) { return find_cycle_exact(g, n); }, py::arg("g"), py::arg("n"));
  m.def("is_cycle_of_length", &is_cycle_of_length, py::arg("g"), py::arg("cycle"), py::arg("n"));
  m.def("max_cnfree_edges", [](const Graph& g, int n, int edge_cap) { return dict_of(max_cnfree_edges(g, n, edge_cap)); },
        py::arg("g"), py::arg("n"), py::arg("edge_cap") = 20);
  m.def("arrow_check", [](const Graph& g, int n, int r) { return dict_of(arrow_check(g, n, r)); }, py::arg("g"),
        py::arg("n"), py::arg("r"));
  m.def("gamma_arrow_check", [](const Graph& g, int n, int r) { return dict_of(gamma_arrow_check(g, n, r)); },
        py::arg("g"), py::arg("n"), py::arg("r"));
  m.def("adversarial_color_odd", [](const Graph& h, int n, int r) { return dict_of(adversarial_color_odd(h, n, r)); },
        py::arg("h"), py::arg("n"), py::arg("r"));
  m.def(
      "run_peeling",
      [](const Graph& h, std::vector<int> colors, int num_colors, int n, double alpha, bool relaxed) {
        PeelingOptions opt;
        opt.pipeline = pipeline(relaxed, 1'000'000);
        return dict_of(run_peeling(h, EdgeColoring(h, std::move(colors), num_colors), n, alpha, opt));
      },
      py::arg("h"), py::arg("colors"), py::arg("num_colors"), py::arg("n"), py::arg("alpha"), py::arg("relaxed") = false);
  m.def("lower_bound_value", &lower_bound_value, py::arg("n"), py::arg("r"));

  // bounds (long double results are returned as float)
  m.def("claim2_aa_value", [](double n, double lambda) { return static_cast<double>(claim2_aa_value(n, lambda)); },
        py::arg("n"), py::arg("lam") = static_cast<double>(kLambda));
  m.def("claim2_aa_limit", [](double lambda) { return static_cast<double>(claim2_aa_limit(lambda)); },
        py::arg("lam") = static_cast<double>(kLambda));
  m.def("claim2_min_n", [](double lambda) { return claim2_min_n(lambda); }, py::arg("lam") = static_cast<double>(kLambda));
  m.def(
      "claim2_scan",
      [](double lo, double hi, double step) {
        py::list rows;
        for (const auto& row : claim2_scan(lo, hi, step)) rows.append(dict_of(row));
        return rows;
      },
      py::arg("lo"), py::arg("hi"), py::arg("step"));
  m.def("ineqA_check", [](double r, double n, int d, int f) { return dict_of(ineqA_check(r, n, d, f)); }, py::arg("r"),
        py::arg("n"), py::arg("d") = 59, py::arg("f") = 2);
  m.def("even_upper_constant", [](double r, double n, int d, int f) { return dict_of(even_upper_constant(r, n, d, f)); },
        py::arg("r"), py::arg("n"), py::arg("d") = 59, py::arg("f") = 2);
  m.def("odd_upper_constant_log2", [](int r) {
    return static_cast<double>(odd_upper_constant(r).log_magnitude() / std::log(2.0L));
  }, py::arg("r"));
  m.def("peeling_recursion_check", [](int s) { return dict_of(peeling_recursion_check(s)); }, py::arg("s"));
}
