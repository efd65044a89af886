#include "landau/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

#include "landau/errors.hpp"
#include "landau/presets.hpp"

namespace landau {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ConfigError(key + ": " + what);
}

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
        if (!known) fail(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
    }
}

const json& require(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail(where.empty() ? key : where + "." + key, "required key missing");
    return obj.at(key);
}

double number(const json& v, const std::string& key) {
    if (!v.is_number()) fail(key, "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(key, "must be finite");
    return d;
}

double positive(const json& v, const std::string& key) {
    const double d = number(v, key);
    if (!(d > 0.0)) fail(key, "must be > 0");
    return d;
}

unsigned non_negative_int(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(key, "must be a non-negative integer");
    return static_cast<unsigned>(v.get<long long>());
}

std::string string_value(const json& v, const std::string& key) {
    if (!v.is_string()) fail(key, "must be a string");
    return v.get<std::string>();
}

const json& object(const json& v, const std::string& key) {
    if (!v.is_object()) fail(key, "must be an object");
    return v;
}

FieldProfile parse_profile(const json& p) {
    object(p, "profile");
    const std::string kind = string_value(require(p, "profile", "kind"), "profile.kind");
    auto field = [&](const char* key) { return positive(require(p, "profile", key), std::string("profile.") + key); };
    auto real = [&](const char* key) { return number(require(p, "profile", key), std::string("profile.") + key); };
    try {
        if (kind == "constant") {
            reject_unknown(p, "profile", {"kind", "b0"});
            return FieldProfile::constant(field("b0"));
        }
        if (kind == "step_sequence") {
            reject_unknown(p, "profile", {"kind", "b0", "steps"});
            const json& steps = require(p, "profile", "steps");
            if (!steps.is_array()) fail("profile.steps", "must be an array of [t, b] pairs");
            std::vector<std::pair<double, double>> s;
            for (std::size_t i = 0; i < steps.size(); ++i) {
                const std::string key = "profile.steps[" + std::to_string(i) + "]";
                if (!steps[i].is_array() || steps[i].size() != 2) fail(key, "must be a [t, b] pair");
                const double t = number(steps[i][0], key + "[0]");
                const double b = positive(steps[i][1], key + "[1]");
                s.emplace_back(t, b);
            }
            return FieldProfile::step_sequence(field("b0"), std::move(s));
        }
        if (kind == "tanh_ramp") {
            reject_unknown(p, "profile", {"kind", "b0", "b1", "center", "width"});
            return FieldProfile::tanh_ramp(field("b0"), field("b1"), real("center"), field("width"));
        }
        if (kind == "tanh_cycle") {
            reject_unknown(p, "profile", {"kind", "b0", "b1", "up_center", "down_center", "width", "down_width"});
            const double w = field("width");
            const double dw = p.contains("down_width") ? field("down_width") : w;
            return FieldProfile::tanh_cycle(field("b0"), field("b1"), real("up_center"), real("down_center"), w, dw);
        }
    } catch (const DomainError& e) {
        fail("profile", e.what());
    }
    fail("profile.kind", "must be one of constant, step_sequence, tanh_ramp, tanh_cycle");
}

json profile_to_json(const FieldProfile& p) {
    json j;
    j["kind"] = to_string(p.kind());
    j["b0"] = p.b0();
    switch (p.kind()) {
        case ProfileKind::constant: break;
        case ProfileKind::step_sequence: {
            json steps = json::array();
            for (const auto& [t, b] : p.steps()) steps.push_back({t, b});
            j["steps"] = steps;
            break;
        }
        case ProfileKind::tanh_ramp:
            j["b1"] = p.b1();
            j["center"] = p.center();
            j["width"] = p.width();
            break;
        case ProfileKind::tanh_cycle:
            j["b1"] = p.b1();
            j["up_center"] = p.center();
            j["down_center"] = p.down_center();
            j["width"] = p.width();
            j["down_width"] = p.down_width();
            break;
    }
    return j;
}

Engine parse_engine(const json& v, const std::string& key) {
    const std::string s = string_value(v, key);
    if (s == "madelung") return Engine::madelung;
    if (s == "levels") return Engine::levels;
    if (s == "oracle") return Engine::oracle;
    fail(key, "unknown engine '" + s + "' (expected madelung, levels or oracle)");
}

}  // namespace

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::madelung: return "madelung";
        case Engine::levels: return "levels";
        case Engine::oracle: return "oracle";
    }
    return "unknown";
}

bool ScenarioConfig::has(Engine e) const { return std::find(engines.begin(), engines.end(), e) != engines.end(); }

std::vector<double> ScenarioConfig::sample_times() const {
    const auto k = static_cast<std::size_t>(std::llround(t_end / sample_dt));
    std::vector<double> ts(k + 1);
    for (std::size_t i = 0; i <= k; ++i) ts[i] = t_end * static_cast<double>(i) / static_cast<double>(k);
    ts.back() = t_end;
    return ts;
}

void validate_config(const ScenarioConfig& c) {
    if (c.name.empty()) fail("name", "must be a non-empty string");
    if (!(c.t_end > 0.0) || !std::isfinite(c.t_end)) fail("t_end", "must be > 0");
    if (!(c.sample_dt > 0.0) || c.sample_dt > c.t_end) fail("sample_dt", "must be in (0, t_end]");
    const double ratio = c.t_end / c.sample_dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
        fail("sample_dt", "must divide t_end");
    if (!(c.tol >= 1e-14 && c.tol <= 1e-3)) fail("tol", "must lie in [1e-14, 1e-3]");
    if (!(c.oracle_dt > 0.0)) fail("oracle.dt", "must be > 0");
    // Accuracy budget of the midpoint-potential Crank-Nicolson step (stable for any dt).
    const double bmax = c.profile.upper_bound();
    if (c.has(Engine::oracle) && c.oracle_dt > 0.01 / (bmax * bmax))
        fail("oracle.dt", "must be <= 0.01 / max(b)^2");
    if (c.grid.half_width && !(*c.grid.half_width > 0.0)) fail("grid.half_width", "must be > 0");
    if (c.grid.count && (*c.grid.count < 5 || *c.grid.count % 2 == 0)) fail("grid.count", "must be odd and >= 5");
    if (c.engines.empty()) fail("engines", "must name at least one engine");
    std::set<Engine> seen(c.engines.begin(), c.engines.end());
    if (seen.size() != c.engines.size()) fail("engines", "duplicate engine");
    if (c.has(Engine::levels) && !c.profile.is_smooth())
        fail("engines", "levels engine requires a smooth profile (b' is singular at a step)");
    if (c.n_max && *c.n_max < c.n0 + 8) fail("n_max", "must be >= n0 + 8");
    for (double t : c.snapshot_times)
        if (!(t >= 0.0 && t <= c.t_end)) fail("snapshot_times", "entries must lie in [0, t_end]");
}

ScenarioConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("document: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document", "must be a JSON object");
    reject_unknown(doc, "", {"name", "n0", "profile", "t_end", "sample_dt", "tol", "grid", "oracle", "engines", "n_max",
                             "output_dir", "snapshot_times", "expect", "preset", "preset_params"});

    ScenarioConfig c;
    bool from_preset = false;
    if (doc.contains("preset")) {
        std::map<std::string, double> params;
        if (doc.contains("preset_params")) {
            const json& pp = object(doc["preset_params"], "preset_params");
            for (auto it = pp.begin(); it != pp.end(); ++it)
                params[it.key()] = number(it.value(), "preset_params." + it.key());
        }
        c = expand_preset(string_value(doc["preset"], "preset"), params);
        from_preset = true;
    } else if (doc.contains("preset_params")) {
        fail("preset_params", "only allowed together with preset");
    }
    if (!from_preset) {
        require(doc, "", "name");
        require(doc, "", "profile");
        require(doc, "", "t_end");
    }
    const std::string old_default_dir = "out/" + c.name;
    if (doc.contains("name")) c.name = string_value(doc["name"], "name");
    if (doc.contains("n0")) c.n0 = non_negative_int(doc["n0"], "n0");
    if (doc.contains("profile")) c.profile = parse_profile(doc["profile"]);
    if (doc.contains("t_end")) c.t_end = positive(doc["t_end"], "t_end");
    if (doc.contains("sample_dt")) c.sample_dt = positive(doc["sample_dt"], "sample_dt");
    if (doc.contains("tol")) c.tol = positive(doc["tol"], "tol");
    if (doc.contains("grid")) {
        const json& g = object(doc["grid"], "grid");
        reject_unknown(g, "grid", {"half_width", "count"});
        if (g.contains("half_width")) c.grid.half_width = positive(g["half_width"], "grid.half_width");
        if (g.contains("count")) c.grid.count = non_negative_int(g["count"], "grid.count");
    }
    if (doc.contains("oracle")) {
        const json& o = object(doc["oracle"], "oracle");
        reject_unknown(o, "oracle", {"dt"});
        if (o.contains("dt")) c.oracle_dt = positive(o["dt"], "oracle.dt");
    }
    if (doc.contains("engines")) {
        const json& e = doc["engines"];
        if (!e.is_array()) fail("engines", "must be an array of engine names");
        c.engines.clear();
        for (std::size_t i = 0; i < e.size(); ++i) c.engines.push_back(parse_engine(e[i], "engines[" + std::to_string(i) + "]"));
    }
    if (doc.contains("n_max")) c.n_max = non_negative_int(doc["n_max"], "n_max");
    if (doc.contains("output_dir")) c.output_dir = string_value(doc["output_dir"], "output_dir");
    else if (c.output_dir.empty() || c.output_dir == old_default_dir) c.output_dir = "out/" + c.name;
    if (doc.contains("snapshot_times")) {
        const json& s = doc["snapshot_times"];
        if (!s.is_array()) fail("snapshot_times", "must be an array of times");
        c.snapshot_times.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            c.snapshot_times.push_back(number(s[i], "snapshot_times[" + std::to_string(i) + "]"));
    }
    if (doc.contains("expect")) {
        const json& e = object(doc["expect"], "expect");
        reject_unknown(e, "expect", {"final_excess_max", "final_excess_min", "final_abs_beta_max"});
        if (e.contains("final_excess_max")) c.expect.final_excess_max = number(e["final_excess_max"], "expect.final_excess_max");
        if (e.contains("final_excess_min")) c.expect.final_excess_min = number(e["final_excess_min"], "expect.final_excess_min");
        if (e.contains("final_abs_beta_max"))
            c.expect.final_abs_beta_max = number(e["final_abs_beta_max"], "expect.final_abs_beta_max");
    }
    validate_config(c);
    return c;
}

std::string config_to_json(const ScenarioConfig& c, int indent) {
    json j;
    j["name"] = c.name;
    j["n0"] = c.n0;
    j["profile"] = profile_to_json(c.profile);
    j["t_end"] = c.t_end;
    j["sample_dt"] = c.sample_dt;
    j["tol"] = c.tol;
    json g = json::object();
    if (c.grid.half_width) g["half_width"] = *c.grid.half_width;
    if (c.grid.count) g["count"] = *c.grid.count;
    j["grid"] = g;
    j["oracle"] = {{"dt", c.oracle_dt}};
    json e = json::array();
    for (Engine en : c.engines) e.push_back(to_string(en));
    j["engines"] = e;
    j["n_max"] = c.levels_truncation();
    j["output_dir"] = c.output_dir;
    j["snapshot_times"] = c.snapshot_times;
    json ex = json::object();
    if (c.expect.final_excess_max) ex["final_excess_max"] = *c.expect.final_excess_max;
    if (c.expect.final_excess_min) ex["final_excess_min"] = *c.expect.final_excess_min;
    if (c.expect.final_abs_beta_max) ex["final_abs_beta_max"] = *c.expect.final_abs_beta_max;
    j["expect"] = ex;
    if (!c.preset.empty()) {
        j["preset"] = c.preset;
        j["preset_params"] = c.preset_params;
    }
    return j.dump(indent);
}

}  // namespace landau
