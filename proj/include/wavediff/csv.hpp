#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavediff::csv {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// %.17g rendering, enough digits to round-trip a double exactly.
std::string format_double(double v);

/// Read a numeric series: one value per row, taken from the last
/// comma-separated field (so both plain columns and index,value files
/// parse). A single leading header row is skipped when its value field is
/// not numeric. Malformed rows raise CsvError naming the line number.
std::vector<double> read_series(std::istream& in, std::string_view source_name);
std::vector<double> read_series_file(const std::filesystem::path& path);

/// Write via a temporary file in the same directory plus atomic rename,
/// so failed runs never leave partial output behind.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wavediff::csv
