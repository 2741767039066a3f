#pragma once

#include <json.hpp>

#include "fanspec/enumerate.hpp"
#include "fanspec/freeness.hpp"
#include "fanspec/proofcheck.hpp"
#include "fanspec/search.hpp"
#include "fanspec/spectral.hpp"

namespace fanspec {

using Json = nlohmann::ordered_json;

/// Report schema version carried by every CLI manifest.
inline constexpr int kSchemaVersion = 1;

Json to_json(const VertexSet& s);
Json to_json(const Witness& w);
/// rho, residual and iterations; the vector only when `with_vector`.
Json to_json(const PerronData& p, bool with_vector = false);
Json to_json(const Decomposition& d);
Json to_json(const IdentityReport& r);
Json to_json(const EdgeBoundReport& r);
Json to_json(const EtaReport& r);
Json to_json(const ScanReport& r);
/// Traces are included when `with_traces`.
Json to_json(const SearchReport& r, bool with_traces = true);
Json to_json(const LocalMaxReport& r);

}  // namespace fanspec
