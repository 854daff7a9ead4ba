#pragma once
// Deterministic text output. All numbers go through format_double ("%.17g",
// round-trip exact), newlines are '\n', and headers carry the resolved run
// configuration as '#' comment lines so every artifact is self-describing.

#include <fstream>
#include <string>
#include <vector>

namespace gpe::io {

std::string format_double(double v);

class CsvWriter {
public:
    // throws std::runtime_error when the file cannot be opened
    CsvWriter(const std::string& path, const std::vector<std::string>& header_lines,
              const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void close();

private:
    std::ofstream out_;
    std::string path_;
    std::size_t columns_ = 0;
};

}  // namespace gpe::io
