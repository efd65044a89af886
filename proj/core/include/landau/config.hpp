#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "landau/profile.hpp"

namespace landau {

enum class Engine { madelung, levels, oracle };

std::string to_string(Engine engine);

struct GridOverrides {
    std::optional<double> half_width;
    std::optional<std::size_t> count;
};

struct Expectations {
    std::optional<double> final_excess_max;  // excess(t_end) <= value
    std::optional<double> final_excess_min;  // excess(t_end) > value
    std::optional<double> final_abs_beta_max;  // |beta(t_end)| <= value
};

struct ScenarioConfig {
    std::string name;
    unsigned n0 = 0;
    FieldProfile profile = FieldProfile::constant(1.0);
    double t_end = 0.0;
    double sample_dt = 0.01;
    double tol = 1e-10;
    GridOverrides grid;
    double oracle_dt = 1e-3;
    std::vector<Engine> engines = {Engine::madelung};
    std::optional<unsigned> n_max;  // levels truncation; default n0 + 40
    std::string output_dir;         // default "out/<name>"
    std::vector<double> snapshot_times;
    Expectations expect;
    std::string preset;  // preset the config was expanded from, if any
    std::map<std::string, double> preset_params;

    bool has(Engine e) const;
    unsigned levels_truncation() const { return n_max.value_or(n0 + 40); }
    // 0, sample_dt, 2 sample_dt, ..., t_end.
    std::vector<double> sample_times() const;
};

// Parses and validates a JSON scenario. Unknown keys, wrong types and violated
// constraints throw ConfigError naming the key.
ScenarioConfig parse_config(const std::string& json_text);

// Re-validates a programmatically built config (same rules as parse_config).
void validate_config(const ScenarioConfig& config);

// Canonical JSON echo; parse_config(config_to_json(c)) reproduces c.
std::string config_to_json(const ScenarioConfig& config, int indent = 2);

}  // namespace landau
