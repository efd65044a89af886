#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "landau/config.hpp"
#include "landau/csv.hpp"
#include "landau/errors.hpp"
#include "landau/presets.hpp"
#include "landau/run.hpp"

using namespace landau;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("landau_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

std::string config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

const char* kSmallRamp = R"({
  "name": "small_ramp",
  "n0": 1,
  "profile": {"kind": "tanh_ramp", "b0": 1.0, "b1": 1.4, "center": 1.0, "width": 0.4},
  "t_end": 2.0,
  "sample_dt": 0.05,
  "grid": {"count": 4097},
  "oracle": {"dt": 0.002},
  "engines": ["madelung", "levels", "oracle"],
  "n_max": 20,
  "snapshot_times": [0.0, 1.0, 2.0]
})";

ScenarioConfig small_ramp(const fs::path& out) {
    ScenarioConfig c = parse_config(kSmallRamp);
    c.output_dir = out.string();
    return c;
}

#ifdef LANDAU_CLI_PATH
int run_cli(const std::string& args) {
    const std::string cmd = std::string(LANDAU_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

}  // namespace

TEST(Config, MinimalDefaults) {
    const auto c = parse_config(R"({"name": "x", "profile": {"kind": "constant", "b0": 1.5}, "t_end": 1.0})");
    EXPECT_EQ(c.tol, 1e-10);
    EXPECT_EQ(c.sample_dt, 0.01);
    EXPECT_EQ(c.n0, 0u);
    EXPECT_EQ(c.output_dir, "out/x");
    EXPECT_EQ(c.engines.size(), 1u);
    EXPECT_TRUE(c.has(Engine::madelung));
    EXPECT_EQ(c.levels_truncation(), 40u);
    const auto ts = c.sample_times();
    ASSERT_EQ(ts.size(), 101u);
    EXPECT_EQ(ts.front(), 0.0);
    EXPECT_EQ(ts.back(), 1.0);
}

TEST(Config, ErrorsNameTheKey) {
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": -1}, "t_end": 1})").find("profile.b0"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": 1}, "t_end": 1, "colour": 3})")
                  .find("colour"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": 1, "b9": 2}, "t_end": 1})").find("b9"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": 1}, "t_end": 1, "sample_dt": 0.3})")
                  .find("sample_dt"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "step_sequence", "b0": 1, "steps": [[0, 2]]},
                               "t_end": 1, "engines": ["levels"]})")
                  .find("engines"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": 1}, "t_end": 1, "tol": 1})").find("tol"),
              std::string::npos);
    EXPECT_NE(config_error(R"({"profile": {"kind": "constant", "b0": 1}, "t_end": 1})").find("name"), std::string::npos);
    EXPECT_NE(config_error(R"({"name": "x", "profile": {"kind": "constant", "b0": 2}, "t_end": 1,
                               "engines": ["oracle"], "oracle": {"dt": 0.005}})")
                  .find("oracle.dt"),
              std::string::npos);
    EXPECT_NE(config_error("[1, 2]").find("document"), std::string::npos);
    EXPECT_NE(config_error("{not json").find("document"), std::string::npos);
    EXPECT_NE(config_error(R"({"preset": "nope"})").find("preset"), std::string::npos);
}

TEST(Presets, ListAndExpand) {
    const auto list = list_presets();
    std::vector<std::string> names;
    for (const auto& p : list) names.push_back(p.name);
    EXPECT_EQ(names, (std::vector<std::string>{"fig4_cycle", "fig5_marginal_cycle", "step_1_to_2", "adiabatic_ramp",
                                               "appendixA_check"}));
    const auto c = expand_preset("fig5_marginal_cycle", {{"k", 2}, {"b1", 2.5}});
    const auto& steps = c.profile.steps();
    ASSERT_EQ(steps.size(), 2u);
    EXPECT_EQ(steps[0].first, 0.0);
    EXPECT_EQ(steps[0].second, 2.5);
    EXPECT_NEAR(steps[1].first, 2.0 * std::numbers::pi / 2.5, 1e-15);
    EXPECT_EQ(steps[1].second, 1.0);
    EXPECT_THROW(expand_preset("fig5_marginal_cycle", {{"bogus", 1}}), ConfigError);
    EXPECT_THROW(expand_preset("missing"), ConfigError);
}

TEST(Presets, RoundTripThroughJson) {
    for (const auto& p : list_presets()) {
        const auto c = expand_preset(p.name);
        const std::string once = config_to_json(c);
        EXPECT_EQ(config_to_json(parse_config(once)), once) << p.name;
        EXPECT_NO_THROW(validate_config(c));
    }
    const auto via_doc = parse_config(R"({"preset": "step_1_to_2", "preset_params": {"b1": 3.0}, "tol": 1e-9})");
    EXPECT_EQ(via_doc.profile.steps().front().second, 3.0);
    EXPECT_EQ(via_doc.tol, 1e-9);
    EXPECT_NEAR(via_doc.t_end, 10.0 * std::numbers::pi / 3.0, 1e-12);
}

TEST(Csv, NumberFormatting) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, RejectsWrongRowWidth) {
    const fs::path dir = scratch("csv");
    CsvWriter w(dir / "a.csv", {"x", "y"});
    EXPECT_THROW(w.row({1.0}), std::logic_error);
    w.row({1.0, 2.0});
    w.close();
    EXPECT_EQ(slurp(dir / "a.csv"), "x,y\n1,2\n");
}

TEST(Run, ArtifactsHeadersAndManifest) {
    const fs::path dir = scratch("artifacts");
    const auto rep = run_scenario(small_ramp(dir));
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.value << " > " << c.tolerance;
    EXPECT_TRUE(rep.ok()) << rep.diagnostic;
    EXPECT_EQ(first_line(dir / "trajectory.csv"), "t,b,beta,beta_dot,gamma,int_beta,int_gamma");
    EXPECT_EQ(first_line(dir / "energy.csv"), "t,b,E_kx,E_ky,E_Q,E_total,excess");
    EXPECT_EQ(first_line(dir / "coefficients.csv"), "t,p0,p1,p2,p3,p4,p5,p6,p7,p8,p9,p10,p11,p12");
    EXPECT_EQ(first_line(dir / "mass_flux.csv"), "t,y,rho,mass_flux");
    bool snapshot = false;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().filename().string().rfind("snapshot_", 0) == 0) {
            snapshot = true;
            EXPECT_EQ(first_line(e.path()), "y,re_psi,im_psi,rho");
        }
    }
    EXPECT_TRUE(snapshot);

    const json m = json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(m["status"], "ok");
    EXPECT_EQ(m["config"]["name"], "small_ramp");
    std::size_t listed = 0;
    for (const auto& f : m["files"]) {
        ++listed;
        EXPECT_EQ(f["sha256"], sha256_file(dir / f["path"].get<std::string>())) << f["path"];
        EXPECT_FALSE(f["kind"].get<std::string>().empty());
    }
    std::size_t on_disk = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().filename() != "manifest.json") ++on_disk;
    EXPECT_EQ(listed, on_disk);
    for (const auto& c : m["checks"]) {
        EXPECT_TRUE(c.contains("name") && c.contains("value") && c.contains("tolerance") && c.contains("pass"));
    }
}

TEST(Run, Deterministic) {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    run_scenario(small_ramp(a));
    run_scenario(small_ramp(b));
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        if (e.path().extension() != ".csv") continue;
        EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path().filename();
        ++compared;
    }
    EXPECT_GE(compared, 6u);
}

TEST(Run, CrossEngineDensityAgreement) {
    const fs::path dir = scratch("cross");
    const auto rep = run_scenario(small_ramp(dir));
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.name == "oracle_vs_exact_density") {
            found = true;
            EXPECT_LE(c.value, 1e-4);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Run, FailedExpectationIsReported) {
    const fs::path dir = scratch("expect");
    ScenarioConfig c = small_ramp(dir);
    c.engines = {Engine::madelung};
    c.expect.final_excess_max = -1.0;
    const auto rep = run_scenario(c);
    EXPECT_FALSE(rep.ok());
    EXPECT_EQ(rep.exit_code(), 1);
    EXPECT_EQ(json::parse(slurp(dir / "manifest.json"))["status"], "check_failure");
}

TEST(Run, EngineFailureIsReported) {
    const fs::path dir = scratch("engine");
    ScenarioConfig c = small_ramp(dir);
    c.engines = {Engine::madelung, Engine::oracle};
    c.grid.half_width = 3.0;  // too narrow for the oracle's boundary containment
    c.grid.count = 257;
    const auto rep = run_scenario(c);
    EXPECT_TRUE(rep.engine_failed);
    EXPECT_FALSE(rep.diagnostic.empty());
    const json m = json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(m["status"], "engine_failure");
}

TEST(Run, EveryPresetPassesItsOwnChecks) {
    for (const auto& p : list_presets()) {
        ScenarioConfig c = expand_preset(p.name);
        c.output_dir = scratch("preset_" + p.name).string();
        const auto rep = run_scenario(c);
        EXPECT_TRUE(rep.ok()) << p.name << ": " << rep.diagnostic;
        for (const auto& chk : rep.checks) EXPECT_TRUE(chk.pass) << p.name << " " << chk.name << " " << chk.value;
    }
}

#ifdef LANDAU_CLI_PATH
TEST(Cli, ExitCodes) {
    const fs::path dir = scratch("cli");
    {
        std::ofstream(dir / "good.json") << kSmallRamp;
        std::ofstream(dir / "bad.json") << R"({"name": "x", "profile": {"kind": "constant", "b0": 0}, "t_end": 1})";
        json failing = json::parse(kSmallRamp);
        failing["engines"] = {"madelung"};
        failing["expect"] = {{"final_excess_max", -1.0}};
        std::ofstream(dir / "failing.json") << failing.dump();
    }
    EXPECT_EQ(run_cli("validate " + (dir / "good.json").string()), 0);
    EXPECT_EQ(run_cli("validate " + (dir / "bad.json").string()), 2);
    EXPECT_EQ(run_cli("validate " + (dir / "missing.json").string()), 2);
    EXPECT_EQ(run_cli("run " + (dir / "good.json").string() + " --quiet --out " + (dir / "o1").string()), 0);
    EXPECT_TRUE(fs::exists(dir / "o1" / "manifest.json"));
    EXPECT_EQ(run_cli("run " + (dir / "failing.json").string() + " --out " + (dir / "o2").string()), 1);
    EXPECT_EQ(run_cli("run " + (dir / "good.json").string() + " --tol 1"), 2);
    EXPECT_EQ(run_cli("list"), 0);
    EXPECT_EQ(run_cli("frobnicate"), 2);
}
#endif
