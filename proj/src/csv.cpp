#include "wavediff/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

namespace wavediff::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view field, double& out) {
    if (field.empty()) return false;
    std::string buf(field);
    char* end = nullptr;
    errno = 0;
    out = std::strtod(buf.c_str(), &end);
    return errno == 0 && end == buf.c_str() + buf.size();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> read_series(std::istream& in, std::string_view source_name) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    bool first_data_row = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = trim(line);
        if (row.empty()) continue;
        const std::size_t comma = row.rfind(',');
        const std::string_view field =
            trim(comma == std::string_view::npos ? row : row.substr(comma + 1));
        double v = 0.0;
        if (parse_double(field, v)) {
            values.push_back(v);
            first_data_row = false;
        } else if (first_data_row) {
            first_data_row = false;  // header row
        } else {
            throw CsvError(std::string(source_name) + ":" + std::to_string(lineno) +
                           ": cannot parse '" + std::string(field) + "' as a number");
        }
    }
    if (values.empty())
        throw CsvError(std::string(source_name) + ": no numeric rows found");
    return values;
}

std::vector<double> read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_series(in, path.string());
}

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
    }
}

}  // namespace wavediff::csv
