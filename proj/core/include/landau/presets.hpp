#pragma once

#include <map>
#include <string>
#include <vector>

#include "landau/config.hpp"

namespace landau {

struct PresetInfo {
    std::string name;
    std::string description;
    std::map<std::string, double> defaults;  // tunable parameters
};

// fig4_cycle, fig5_marginal_cycle, step_1_to_2, adiabatic_ramp, appendixA_check.
std::vector<PresetInfo> list_presets();

// Builds the scenario for a preset; params override the listed defaults.
// Unknown preset or parameter names throw ConfigError.
ScenarioConfig expand_preset(const std::string& name, const std::map<std::string, double>& params = {});

}  // namespace landau
