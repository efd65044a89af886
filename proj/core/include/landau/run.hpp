#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "landau/config.hpp"

namespace landau {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct OutputFile {
    std::string path;  // relative to the output directory
    std::string sha256;
    std::string kind;
};

struct RunReport {
    std::filesystem::path output_dir;
    std::vector<OutputFile> files;
    std::vector<CheckResult> checks;
    bool engine_failed = false;
    std::string diagnostic;

    bool ok() const;
    int exit_code() const { return ok() ? 0 : 1; }
};

// Runs the selected engines, writes CSV artifacts and manifest.json into
// config.output_dir. Engine exceptions are recorded in the report and manifest.
RunReport run_scenario(const ScenarioConfig& config);

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace landau
