#include "landau/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "landau/errors.hpp"

namespace landau {

namespace {

using Params = std::map<std::string, double>;

const std::vector<PresetInfo>& catalog() {
    static const std::vector<PresetInfo> presets = {
        {"fig4_cycle",
         "tanh ramp up, hold, tanh ramp down (b0 -> b1 -> b0); leaves persistent sloshing",
         {{"b0", 1.0}, {"b1", 2.0}, {"up_center", 10.0}, {"down_center", 30.0}, {"width", 1.0}, {"t_end", 50.0}, {"n0", 2.0}}},
        {"fig5_marginal_cycle",
         "step b0 -> b1 at t = 0 and back at tau = k pi / b1; sloshing cancels exactly",
         {{"b0", 1.0}, {"b1", 2.0}, {"k", 1.0}, {"hold", 10.0}, {"n0", 2.0}}},
        {"step_1_to_2",
         "single step b0 -> b1 at t = 0, followed for ten sloshing periods",
         {{"b0", 1.0}, {"b1", 2.0}, {"n0", 0.0}}},
        {"adiabatic_ramp",
         "slow tanh ramp; all three engines with cross-engine gates",
         {{"b0", 1.0}, {"b1", 1.5}, {"center", 15.0}, {"width", 3.0}, {"t_end", 30.0}, {"n0", 1.0}}},
        {"appendixA_check",
         "tanh ramp centred at t = 0 so that b(0) = 1 and b'(0) = 0.5; short-time moving-basis consistency",
         {{"b0", 0.5}, {"b1", 1.5}, {"center", 0.0}, {"width", 1.0}, {"t_end", 2.0}, {"n0", 0.0}}},
    };
    return presets;
}

Params merge(const PresetInfo& info, const Params& overrides) {
    Params p = info.defaults;
    for (const auto& [k, v] : overrides) {
        if (!p.contains(k)) throw ConfigError("preset_params." + k + ": unknown parameter for preset " + info.name);
        p[k] = v;
    }
    return p;
}

unsigned level(const Params& p) {
    const double n = p.at("n0");
    if (!(n >= 0.0) || n != std::floor(n)) throw ConfigError("preset_params.n0: must be a non-negative integer");
    return static_cast<unsigned>(n);
}

// Largest sample spacing <= 0.01 that divides t_end.
double sample_spacing(double t_end, double target = 0.01) {
    return t_end / std::ceil(t_end / target - 1e-9);
}

FieldProfile checked(auto make) {
    try {
        return make();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("preset_params: ") + e.what());
    }
}

}  // namespace

std::vector<PresetInfo> list_presets() { return catalog(); }

ScenarioConfig expand_preset(const std::string& name, const Params& overrides) {
    const auto& all = catalog();
    auto it = std::find_if(all.begin(), all.end(), [&](const PresetInfo& p) { return p.name == name; });
    if (it == all.end()) throw ConfigError("preset: unknown preset '" + name + "'");
    const Params p = merge(*it, overrides);

    ScenarioConfig c;
    c.name = name;
    c.preset = name;
    c.preset_params = overrides;
    c.n0 = level(p);
    if (name == "fig4_cycle") {
        c.profile = checked([&] {
            return FieldProfile::tanh_cycle(p.at("b0"), p.at("b1"), p.at("up_center"), p.at("down_center"), p.at("width"),
                                            p.at("width"));
        });
        c.t_end = p.at("t_end");
        c.engines = {Engine::madelung, Engine::levels};
        c.expect.final_excess_min = 0.0;
        c.snapshot_times = {0.0, 0.5 * (p.at("up_center") + p.at("down_center")), c.t_end};
    } else if (name == "fig5_marginal_cycle") {
        const double k = p.at("k");
        if (!(k >= 1.0) || k != std::floor(k)) throw ConfigError("preset_params.k: must be a positive integer");
        const double b1 = p.at("b1");
        if (!(b1 > 0.0)) throw ConfigError("preset_params.b1: must be > 0");
        const double tau = k * std::numbers::pi / b1;
        c.profile = checked([&] { return FieldProfile::step_sequence(p.at("b0"), {{0.0, b1}, {tau, p.at("b0")}}); });
        c.t_end = tau + p.at("hold");
        c.engines = {Engine::madelung, Engine::oracle};
        // Gamma reaches 4 b0 between the switches; a finer grid keeps the CN error under 1e-4.
        c.grid.count = 8193;
        c.expect.final_excess_max = 1e-8;
        c.expect.final_abs_beta_max = 1e-8;
        c.snapshot_times = {0.0, 0.5 * tau, tau, c.t_end};
    } else if (name == "step_1_to_2") {
        const double b1 = p.at("b1");
        if (!(b1 > 0.0)) throw ConfigError("preset_params.b1: must be > 0");
        c.profile = checked([&] { return FieldProfile::step_sequence(p.at("b0"), {{0.0, b1}}); });
        c.t_end = 10.0 * std::numbers::pi / b1;
        c.engines = {Engine::madelung, Engine::oracle};
        // Strong sloshing (epsilon = 0.6): both h^2 and dt^2 CN errors matter here.
        c.grid.count = 8193;
        c.oracle_dt = 5e-4;
        c.snapshot_times = {0.0, 0.5 * std::numbers::pi / b1, c.t_end};
    } else if (name == "adiabatic_ramp") {
        c.profile = checked(
            [&] { return FieldProfile::tanh_ramp(p.at("b0"), p.at("b1"), p.at("center"), p.at("width")); });
        c.t_end = p.at("t_end");
        c.engines = {Engine::madelung, Engine::levels, Engine::oracle};
        // The CN oracle's coefficient error is O(h^2); this grid keeps it below the 1e-5 gate.
        c.grid.count = 8193;
        c.snapshot_times = {0.0, p.at("center"), c.t_end};
    } else {  // appendixA_check
        c.profile = checked(
            [&] { return FieldProfile::tanh_ramp(p.at("b0"), p.at("b1"), p.at("center"), p.at("width")); });
        c.t_end = p.at("t_end");
        c.engines = {Engine::madelung, Engine::levels};
    }
    if (!(c.t_end > 0.0)) throw ConfigError("preset_params: t_end must be > 0");
    c.sample_dt = name == "appendixA_check" ? sample_spacing(c.t_end, 1e-3) : sample_spacing(c.t_end);
    c.output_dir = "out/" + c.name;
    validate_config(c);
    return c;
}

}  // namespace landau
