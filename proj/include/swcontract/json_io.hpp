#pragma once

// JSON (de)serialization for norms, signals, graphs and analysis results.
// Emission is deterministic: fixed field order, floats rounded to 12
// significant digits. Parse errors name the offending JSON path.

#include <string>

#include <json.hpp>

#include "swcontract/certify.hpp"
#include "swcontract/models.hpp"
#include "swcontract/norms.hpp"
#include "swcontract/simsw.hpp"
#include "swcontract/switchsig.hpp"
#include "swcontract/transact.hpp"

namespace swc {

using Json = nlohmann::ordered_json;

// number rounded to 12 significant digits so the serializer prints at most
// that many
Json jnum(double v);

Json norm_to_json(const NormSpec& spec);
NormSpec norm_from_json(const Json& j, const std::string& path = "$");

Json signal_to_json(const SwitchingSignal& signal);
SwitchingSignal signal_from_json(const Json& j, const std::string& path = "$");

Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& j, const std::string& path = "$");

Mat matrix_from_json(const Json& j, const std::string& path = "$");
Json matrix_to_json(const Mat& a);
Vec vector_from_json(const Json& j, const std::string& path = "$");
Json vector_to_json(const Vec& x);

Json measure_to_json(const MeasureResult& r);
Json beta_to_json(const BetaResult& r);
Json certificate_to_json(const Certificate& c);
Json coppel_to_json(const CoppelReport& r);

}  // namespace swc
