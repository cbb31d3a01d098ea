#pragma once

#include <string>

#include <json.hpp>

#include "smhd/shock.hpp"
#include "smhd/symmetrization.hpp"

namespace smhd::io {

using nlohmann::json;

/// Parses text; syntax errors become InvalidConfig.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

/// {"h": h, "v": [v1, v2], "B": [B1, B2]}
json to_json(const State& u);
State state_from_json(const json& j, const std::string& where = "state");

/// {"plus": State, "minus": State, "front": {"slope", "speed"}, "g"}; front and g optional.
json to_json(const SidePair& sp);
SidePair side_pair_from_json(const json& j);

json to_json(const SideTrace& t);
json to_json(const TraceQuantities& tq);
json to_json(const RHResidual& r);
json to_json(const DiscontinuityKind& k);
json to_json(const LaxVerdict& v);
json to_json(const ShockDiagnostics& d);
json to_json(const RectilinearShock& s);
json to_json(const LinearizedShockSetup& s);
json to_json(const SymmetrizerChoice& c);
json to_json(const CvsVerdict& v);

/// Dump with a trailing newline and two-space indent.
std::string dump(const json& j);

} // namespace smhd::io
