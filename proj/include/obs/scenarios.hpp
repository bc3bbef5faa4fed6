#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "obs/arrangements.hpp"
#include "obs/linalg.hpp"

namespace obs {

enum class ScenarioKind { HyperplaneSixTuple, FanTriple, LovaszCheck };

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::HyperplaneSixTuple;
    std::vector<int> parameters;  // (a1,a2,a3) | (a,b) | (r,n)
    std::optional<RatVec> seedImage;
    TenVariant tenVariant = TenVariant::SectionEquations;
    std::optional<bool> invertEpsilon;  // default depends on the scenario
    bool timing = false;
};

struct Report {
    nlohmann::ordered_json data;
    int exitCode = 0;  // 0 verdict, 2 general position failure, 3 invalid parameters
};

struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Report runHyperplaneScenario(const ScenarioConfig& cfg);
Report runFanScenario(const ScenarioConfig& cfg);
Report runLovaszCheck(const ScenarioConfig& cfg);
Report runScenario(const ScenarioConfig& cfg);

RatVec defaultSeed(int n);
// coordinates of eps^(n/2) applied to the equation rows of L, in the basis of those rows
RatMatrix xiMatrix(const std::vector<RatVec>& rows, int n);

std::string renderText(const nlohmann::ordered_json& report);
std::string renderJson(const nlohmann::ordered_json& report);

}  // namespace obs
