#include "cycram/serialize.hpp"

#include <cmath>

namespace cycram {

json real_json(Real x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return static_cast<double>(x);
}

namespace {

json opt_json(const auto& opt) {
  return opt ? json(*opt) : json(nullptr);
}

json vertices_json(const std::vector<Vertex>& v) { return json(v); }

}  // namespace

void to_json(json& j, const VertexSet& s) {
  j = json::array();
  for (Vertex v : s) j.push_back(v);
}

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void to_json(json& j, const Graph& g) {
  j = json::object();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edges();
  if (g.is_labeled()) {
    j["parts"] = json::array({g.part_members(0).size(), g.part_members(1).size()});
  }
}

void to_json(json& j, const EdgeColoring& c) {
  j = json::object();
  j["num_colors"] = c.num_colors();
  json edges = json::array();
  const auto list = c.host().edges();
  for (std::size_t i = 0; i < list.size(); ++i) {
    edges.push_back(json::array({list[i].u, list[i].v, c.colors()[i]}));
  }
  j["edges"] = std::move(edges);
}

void to_json(json& j, const LogScalar& x) {
  j = json::object();
  j["sign"] = x.sign();
  j["log10_magnitude"] = x.sign() == 0 ? json(nullptr) : real_json(x.log10_magnitude());
  j["value"] = x.to_string(15);
}

void to_json(json& j, const ParamSet& p) {
  j = json{{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"eps", p.eps},
           {"delta", p.delta}, {"n", p.n}, {"N", p.N()}, {"p", p.p()}};
}

void to_json(json& j, const Validity& v) { j = json{{"ok", v.ok}, {"violations", v.violations}}; }

void to_json(json& j, const DensityReport& r) {
  j = json::object();
  j["model"] = to_string(r.model);
  j["params"] = r.params;
  j["mode"] = to_string(r.mode);
  if (r.mode == DensityMode::sampled) j["seed"] = r.seed;
  j["total_edges"] = r.total_edges;
  j["edge_window"] = json::array({r.window.lower, r.window.upper});
  j["edge_count_ok"] = r.edge_count_ok;
  j["min_size"] = r.min_size;
  j["pairs_checked"] = r.pairs_checked;
  if (r.worst_pair) {
    j["worst_pair"] = json{{"u", r.worst_pair->u}, {"w", r.worst_pair->w},
                           {"edges", r.worst_pair->edges}, {"ratio", r.worst_pair->ratio}};
  } else {
    j["worst_pair"] = nullptr;
  }
  j["density_ok"] = r.property2_ok;
  j["validity"] = r.validity;
}

void to_json(json& j, const JoinedWitness& w) { j = json{{"a", w.a}, {"b", w.b}}; }

void to_json(json& j, const JoinedResult& r) {
  j = json::object();
  j["verdict"] = to_string(r.verdict);
  j["mode"] = to_string(r.mode_used);
  j["boundary_size"] = r.boundary_size;
  j["nodes"] = r.nodes;
  j["witness"] = opt_json(r.witness);
}

void to_json(json& j, const ExtractionLog& log) {
  j = json::object();
  j["strategy"] = to_string(log.strategy_used);
  json deleted = json::array();
  for (const auto& d : log.deleted) {
    deleted.push_back(json{{"part", d.part}, {"set", d.set}, {"neighborhood_size", d.neighborhood_size}});
  }
  j["deleted"] = std::move(deleted);
  j["deleted_per_part"] = log.deleted_per_part;
  j["survivors"] = json::array({log.survivors[0], log.survivors[1]});
  j["claim1_holds"] = log.claim1_holds;
}

void to_json(json& j, const ExpansionReport& r) {
  j = json::object();
  j["conclusion1"] = r.conclusion1;
  j["conclusion2"] = r.conclusion2;
  j["conclusion3"] = r.conclusion3;
  j["status"] = r.complete ? (r.passed() ? "pass" : "fail") : "partial verification";
  j["monotonicity_extended"] = r.monotonicity_extended;
  if (r.violation) {
    j["violation"] = json{{"conclusion", r.violation->conclusion}, {"part", r.violation->part},
                          {"set", r.violation->set}, {"lhs", r.violation->lhs},
                          {"rhs", r.violation->rhs}};
  } else {
    j["violation"] = nullptr;
  }
  j["nodes"] = r.nodes;
}

void to_json(json& j, const RootedTree& t) {
  j = json::object();
  j["root"] = t.root();
  j["parent"] = t.parents();
  j["height"] = t.height();
  j["vertex_count"] = t.vertex_count();
  if (t.marks()) {
    j["marks"] = json{{"X0", (*t.marks())[0]}, {"X1", (*t.marks())[1]}};
  }
}

void to_json(json& j, const OddGadgets& g) {
  j = json{{"T0", g.t0}, {"T1", g.t1}, {"path_length", g.path_length}};
}

void to_json(json& j, const Embedding& e) { j = e.image; }

void to_json(json& j, const EmbedResult& r) {
  j = json::object();
  j["success"] = r.success;
  j["budget_exhausted"] = r.budget_exhausted;
  j["nodes"] = r.nodes;
  j["backtracks"] = r.backtracks;
  j["blocking"] = r.blocking ? json{{"tree", (*r.blocking)[0]}, {"vertex", (*r.blocking)[1]}}
                             : json(nullptr);
  j["image"] = r.embedding;
}

void to_json(json& j, const PreconditionReport& r) {
  j = json::object();
  j["condition1"] = r.condition1;
  j["condition2"] = r.condition2;
  j["status"] = r.complete ? (r.passed() ? "pass" : "fail") : "partial";
  j["sets_examined"] = r.sets_examined;
  if (r.violation) {
    j["violation"] = json{{"condition", r.violation->condition}, {"part", r.violation->part},
                          {"set", r.violation->set}, {"lhs", r.violation->lhs},
                          {"rhs", r.violation->rhs}};
  } else {
    j["violation"] = nullptr;
  }
}

void to_json(json& j, const InequalityCheck& c) {
  j = json{{"name", c.name}, {"lhs", real_json(c.lhs)}, {"rhs", real_json(c.rhs)}, {"holds", c.holds}};
}

void to_json(json& j, const EvenCycleResult& r) {
  j = json::object();
  j["status"] = to_string(r.status);
  j["label"] = r.out_of_hypothesis ? "out-of-hypothesis" : "in-hypothesis";
  j["cycle"] = vertices_json(r.cycle);
  j["witness"] = opt_json(r.witness);
  j["joined"] = r.joined;
  j["extraction"] = opt_json(r.extraction);
  j["embedding"] = opt_json(r.last_embedding);
  j["hypotheses"] = r.hypotheses;
  j["sufficient_conditions"] = r.sufficient;
  j["leaves"] = r.leaves;
  j["roots_tried"] = r.roots_tried;
  j["detail"] = r.detail;
}

void to_json(json& j, const OddCycleResult& r) {
  j = json::object();
  j["status"] = to_string(r.status);
  j["label"] = r.out_of_hypothesis ? "out-of-hypothesis" : "in-hypothesis";
  j["cycle"] = vertices_json(r.cycle);
  j["case_one"] = opt_json(r.case_one);
  j["case_two"] = r.case_two ? json::array({(*r.case_two)[0], (*r.case_two)[1]}) : json(nullptr);
  j["joined"] = r.joined;
  j["extraction"] = opt_json(r.extraction);
  j["hypotheses"] = r.hypotheses;
  j["sufficient_conditions"] = r.sufficient;
  j["leaves"] = r.leaves;
  j["pairs_tried"] = r.pairs_tried;
  j["embeddings_found"] = r.embeddings_found;
  j["detail"] = r.detail;
}

void to_json(json& j, const CnFreeResult& r) {
  j = json{{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper},
           {"witness_edges", r.witness}, {"nodes", r.nodes}};
}

void to_json(json& j, const ArrowVerdict& v) {
  j = json::object();
  j["holds"] = v.holds;
  j["colorings_examined"] = v.colorings_examined;
  j["symmetry"] = v.symmetry;
  j["witness"] = opt_json(v.witness);
}

void to_json(json& j, const GammaVerdict& v) {
  j = json{{"holds", v.holds}, {"threshold", v.threshold}, {"max_cn_free", v.max_free}};
}

void to_json(json& j, const AdversarialColoring& c) {
  j = json::object();
  j["guaranteed"] = c.guaranteed;
  j["constructive_threshold"] = c.threshold;
  j["lower_bound_leading_term"] = c.lower_bound_leading_term;
  j["caveat"] = kLowerBoundCaveat;
  j["coloring"] = c.coloring;
}

void to_json(json& j, const PeelingOutcome& o) {
  j = json::object();
  j["status"] = to_string(o.status);
  j["label"] = o.out_of_hypothesis ? "out-of-hypothesis" : "in-hypothesis";
  j["verified"] = o.verified;
  j["color"] = o.color;
  j["cycle"] = vertices_json(o.cycle);
  j["sets"] = json::array({o.sets[0], o.sets[1]});
  json steps = json::array();
  for (const auto& s : o.steps) {
    steps.push_back(json{{"color", s.color}, {"size_before", s.size_before},
                         {"status", to_string(s.status)}, {"size_after", s.size_after},
                         {"out_of_hypothesis", s.out_of_hypothesis}, {"detail", s.detail}});
  }
  j["steps"] = std::move(steps);
}

void to_json(json& j, const Claim2Step& s) {
  j = json{{"value_at_nprime", real_json(s.value_at_nprime)}, {"value", real_json(s.value)},
           {"margin", real_json(s.margin)}, {"holds", s.holds}};
}

void to_json(json& j, const AaScanRow& row) {
  j = json{{"lambda", real_json(row.lambda)}, {"limit", real_json(row.limit)},
           {"margin", real_json(row.margin)}};
}

void to_json(json& j, const IneqAReport& r) {
  j = json::object();
  j["d"] = r.d;
  j["f"] = r.f;
  j["lambda"] = real_json(r.lambda);
  j["ln_r"] = real_json(r.ln_r);
  j["ln_n"] = real_json(r.ln_n);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["lhs_greater"] = r.contradiction;
  j["delta"] = real_json(r.delta);
  j["delta_below_one"] = r.delta_below_one;
  j["note"] = r.note;
}

void to_json(json& j, const UpperConstant& c) {
  j = json{{"value", c.value}, {"exponent", c.exponent}};
}

void to_json(json& j, const DeltaReport& r) {
  j = json{{"instance", r.instance}, {"ln_c1", real_json(r.ln_c1)}, {"c2", real_json(r.c2)},
           {"c3", real_json(r.c3)}, {"threshold", real_json(r.threshold)},
           {"coarse_threshold", real_json(r.coarse)}, {"delta", real_json(r.delta)},
           {"admissible", r.admissible}};
}

void to_json(json& j, const RecursionCheck& c) {
  j = json{{"s", c.s}, {"lhs_log2", real_json(c.lhs_log2)}, {"rhs_log2", real_json(c.rhs_log2)},
           {"holds", c.holds}};
}

}  // namespace cycram
