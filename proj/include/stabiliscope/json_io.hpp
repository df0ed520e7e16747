#pragma once

#include <json.hpp>

#include <string>

#include "stabiliscope/fiber_model.hpp"
#include "stabiliscope/graph_lift.hpp"
#include "stabiliscope/pl_map.hpp"
#include "stabiliscope/rational.hpp"
#include "stabiliscope/stabilizer.hpp"

// JSON views of every externally visible value. Writers produce canonical
// documents (sorted keys, rationals in "a/b" text form) so serialisation is
// byte-stable; readers throw input_error carrying the path of the offending
// field.
namespace stabiliscope::io {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const MapSpec& spec);
json to_json(const PLMap& map);
json to_json(const FiberModel& model);
json to_json(const LiftState& state);
json to_json(const ResolvedOrbit& orbit);
json to_json(const Certificate& cert);

Rat rat_from_json(const json& j, const std::string& path);
MapSpec mapspec_from_json(const json& j, const std::string& path);

// Accepts either exponent data ("n"/"monomials", run through the envelope
// construction) or an explicit graph ("breakpoints"/"pieces").
PLMap plmap_from_json(const json& j, const std::string& path);

FiberModel model_from_json(const json& j, const std::string& path);
LiftState lift_state_from_json(const json& j, const std::string& path);

std::string canonical(const json& j);

}  // namespace stabiliscope::io
