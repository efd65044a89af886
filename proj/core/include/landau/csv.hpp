#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace landau {

// Comma-separated table with a fixed header; numbers as 17 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<double>& values);
    void close();

private:
    std::ofstream out_;
    std::size_t columns_;
    std::string line_;
};

// 17 significant digits, shortest exponent form; NaN as "nan".
std::string format_number(double v);

}  // namespace landau
