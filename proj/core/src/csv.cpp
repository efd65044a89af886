#include "landau/csv.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace landau {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";  // also folds -0
    return fmt::format("{:.17g}", v);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::logic_error("CSV row width does not match header");
    line_.clear();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line_ += ',';
        line_ += format_number(values[i]);
    }
    line_ += '\n';
    out_ << line_;
}

void CsvWriter::close() {
    out_.close();
    if (out_.fail()) throw std::runtime_error("failed to finish CSV file");
}

}  // namespace landau
