#include "gpe/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gpe::io {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header_lines,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), path_(path), columns_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& line : header_lines) out_ << "# " << line << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "");
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::logic_error("CsvWriter: wrong column count for " + path_);
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << format_double(values[i]) << (i + 1 < values.size() ? "," : "");
    out_ << "\n";
}

void CsvWriter::close() {
    out_.close();
    if (out_.fail()) throw std::runtime_error("write failed: " + path_);
}

}  // namespace gpe::io
