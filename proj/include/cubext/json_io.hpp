#pragma once

// JSON wire formats. Colors are 1-based on the wire, 0-based in memory.

#include <json.hpp>

#include "cubext/coloring.hpp"
#include "cubext/pipeline.hpp"

namespace cubext {

using json = nlohmann::ordered_json;

/// Strict: unknown fields, duplicate edges, out-of-range values all throw
/// InvalidInput (or NonCanonicalEdge / OutOfRange for bad edges).
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);

/// Applies overrides from a params object on top of `base`.
ParamSet params_from_json(const json& j, ParamSet base = {});
/// Only the fields that differ from the defaults.
json params_to_json(const ParamSet& p);

TotalColoring coloring_from_json(const json& j);
json coloring_to_json(const TotalColoring& c);

json report_to_json(const BoundReport& r);
json reports_to_json(const std::vector<NamedReport>& rs);

json trace_to_json(const Trace& t);
/// Throws CorruptTrace on malformed input.
Trace trace_from_json(const json& j);

json failure_to_json(const Failure& f);
json error_to_json(const Error& e);

}  // namespace cubext
