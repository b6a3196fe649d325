#pragma once

// File ingestion: one series per CSV file with header `date,value`.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tsardl/error.hpp"
#include "tsardl/series.hpp"

namespace tsardl::csv {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split(std::string_view line, char sep = ',') {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto next = line.find(sep, pos);
        out.emplace_back(trim(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (text.empty()) return false;
    std::string buf(text);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

/**
 * @brief Reads a `date,value` series.
 *
 * Rows whose value is empty, NA or non-finite are dropped. Dates must be ISO
 * and strictly increasing; anything else is a ParseError with the line number.
 */
inline TimeSeries read_series(std::istream& in, const std::string& name, Frequency frequency,
                              const std::string& origin = "<stream>") {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<Date> dates;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        auto view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        auto fields = split(view);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() != 2 || fields[0] != "date" || fields[1] != "value") {
                throw Error(ErrorKind::ParseError, origin + ":" + std::to_string(line_no) +
                                                       ": expected header 'date,value'");
            }
            continue;
        }
        if (fields.size() != 2) {
            throw Error(ErrorKind::ParseError,
                        origin + ":" + std::to_string(line_no) + ": expected 2 fields");
        }
        auto date = try_parse_date(fields[0]);
        if (!date) {
            throw Error(ErrorKind::ParseError,
                        origin + ":" + std::to_string(line_no) + ": bad date '" + fields[0] + "'");
        }
        double v = 0.0;
        if (!parse_double(fields[1], v) || !std::isfinite(v)) continue;
        if (!dates.empty() && *date <= dates.back()) {
            throw Error(ErrorKind::ParseError, origin + ":" + std::to_string(line_no) +
                                                   ": dates must be strictly increasing");
        }
        dates.push_back(*date);
        values.push_back(v);
    }
    if (!header_seen) throw Error(ErrorKind::ParseError, origin + ": empty file");
    return TimeSeries(name, std::move(dates), std::move(values), frequency);
}

inline TimeSeries read_series_file(const std::filesystem::path& path, const std::string& name,
                                   Frequency frequency = Frequency::Daily) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    return read_series(in, name, frequency, path.string());
}

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_series(std::ostream& out, const TimeSeries& s) {
    out << "date,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << format_date(s.dates()[i]) << ',' << format_value(s.values()[i]) << '\n';
    }
}

inline void write_series_file(const std::filesystem::path& path, const TimeSeries& s) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    write_series(out, s);
}

}  // namespace tsardl::csv
