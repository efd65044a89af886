// Command-line front end: run, preset, list, validate.
// Exit codes: 0 success, 1 engine or check failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "landau/config.hpp"
#include "landau/errors.hpp"
#include "landau/presets.hpp"
#include "landau/run.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw landau::ConfigError("document: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    std::string out;
    double tol = 0.0;
    bool quiet = false;
};

void apply(landau::ScenarioConfig& c, const Overrides& o) {
    if (!o.out.empty()) c.output_dir = o.out;
    if (o.tol > 0.0) c.tol = o.tol;
    landau::validate_config(c);
}

int execute(landau::ScenarioConfig config, const Overrides& o) {
    apply(config, o);
    const landau::RunReport rep = landau::run_scenario(config);
    if (!o.quiet) {
        for (const auto& c : rep.checks)
            std::printf("%-4s %-28s value=%-12.4g tolerance=%.4g\n", c.pass ? "ok" : "FAIL", c.name.c_str(), c.value,
                        c.tolerance);
        if (rep.engine_failed) std::printf("engine failure: %s\n", rep.diagnostic.c_str());
        std::printf("%s -> %s\n", rep.ok() ? "passed" : "failed", (rep.output_dir / "manifest.json").string().c_str());
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau levels in a time-dependent magnetic field: Madelung exact solution, level dynamics, grid oracle"};
    app.require_subcommand(1);
    Overrides ov;
    std::string config_path, preset_name;

    auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
    run->add_option("config", config_path, "scenario JSON file")->required();
    auto* preset = app.add_subcommand("preset", "run a built-in scenario");
    preset->add_option("name", preset_name, "preset name (see list)")->required();
    auto* list = app.add_subcommand("list", "list built-in scenarios");
    auto* validate = app.add_subcommand("validate", "check a JSON config without running it");
    validate->add_option("config", config_path, "scenario JSON file")->required();

    for (auto* sub : {run, preset}) {
        sub->add_option("--out", ov.out, "output directory");
        sub->add_option("--tol", ov.tol, "integration tolerance")->check(CLI::Range(1e-14, 1e-3));
        sub->add_flag("--quiet", ov.quiet, "suppress the check summary");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*list) {
            for (const auto& p : landau::list_presets()) std::printf("%-22s %s\n", p.name.c_str(), p.description.c_str());
            return 0;
        }
        if (*validate) {
            const auto c = landau::parse_config(read_file(config_path));
            std::printf("%s\n", landau::config_to_json(c).c_str());
            return 0;
        }
        if (*run) return execute(landau::parse_config(read_file(config_path)), ov);
        if (*preset) return execute(landau::expand_preset(preset_name), ov);
    } catch (const landau::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
    return 0;
}
