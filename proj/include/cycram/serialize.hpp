#pragma once

#include <json.hpp>

#include "cycram/bounds.hpp"
#include "cycram/edge_coloring.hpp"
#include "cycram/embed.hpp"
#include "cycram/expander.hpp"
#include "cycram/gadgets.hpp"
#include "cycram/graph.hpp"
#include "cycram/numeric.hpp"
#include "cycram/ramsey.hpp"
#include "cycram/random_models.hpp"

namespace cycram {

using json = nlohmann::ordered_json;

void to_json(json& j, const VertexSet& s);
void to_json(json& j, const Edge& e);
void to_json(json& j, const Graph& g);
void to_json(json& j, const EdgeColoring& c);
void to_json(json& j, const LogScalar& x);

void to_json(json& j, const ParamSet& p);
void to_json(json& j, const Validity& v);
void to_json(json& j, const DensityReport& r);

void to_json(json& j, const JoinedWitness& w);
void to_json(json& j, const JoinedResult& r);
void to_json(json& j, const ExtractionLog& log);
void to_json(json& j, const ExpansionReport& r);

void to_json(json& j, const RootedTree& t);
void to_json(json& j, const OddGadgets& g);

void to_json(json& j, const Embedding& e);
void to_json(json& j, const EmbedResult& r);
void to_json(json& j, const PreconditionReport& r);
void to_json(json& j, const InequalityCheck& c);
void to_json(json& j, const EvenCycleResult& r);
void to_json(json& j, const OddCycleResult& r);

void to_json(json& j, const CnFreeResult& r);
void to_json(json& j, const ArrowVerdict& v);
void to_json(json& j, const GammaVerdict& v);
void to_json(json& j, const AdversarialColoring& c);
void to_json(json& j, const PeelingOutcome& o);

void to_json(json& j, const Claim2Step& s);
void to_json(json& j, const AaScanRow& row);
void to_json(json& j, const IneqAReport& r);
void to_json(json& j, const UpperConstant& c);
void to_json(json& j, const DeltaReport& r);
void to_json(json& j, const RecursionCheck& c);

/// Long double as a JSON number (rounded to double); non-finite values become strings.
json real_json(Real x);

}  // namespace cycram
