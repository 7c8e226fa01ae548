#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trisect/elm.hpp"

namespace trisect {

inline constexpr int kScenarioSchemaVersion = 1;

struct Scenario {
    std::string name;
    ElmState initial;
    std::vector<ElmStep> script;
    nlohmann::json checks = nlohmann::json::object();
};

/// Throws SchemaError on malformed or inconsistent input.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

nlohmann::json to_json(const FormalDivisor& d);
nlohmann::json to_json(const SurfaceClass& c);
nlohmann::json to_json(const RuledSurfaceModel& m);
nlohmann::json to_json(const SingularityProfile& p);
nlohmann::json to_json(const ElmStep& s);
/// Compact summary of a state (no history).
nlohmann::json to_json(const ElmState& s);

}  // namespace trisect
