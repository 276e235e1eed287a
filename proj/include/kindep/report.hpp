#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kindep/bounds.hpp"
#include "kindep/constructions.hpp"
#include "kindep/graph.hpp"
#include "kindep/layers.hpp"
#include "kindep/solver.hpp"

namespace kindep {

// Bumped on any change to the report layout; the committed schema lives in
// schema/report.schema.json.
inline constexpr const char* kSchemaVersion = "1.0.0";

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const SolveResult& r, std::int32_t k);
nlohmann::json to_json(const ColoringResult& r, std::int32_t k);
nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const FamilyParams& p);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const LayerAudit& a);

std::string rational_string(const Rational& r);

// Report envelope: schema_version, command echo, payload, timing_ms.
nlohmann::json make_report(const std::string& verb, const std::vector<std::string>& argv,
                           const std::string& payload_type, nlohmann::json payload, std::int64_t timing_ms);

// Removes the timing field so two reports can be compared byte for byte.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace kindep
