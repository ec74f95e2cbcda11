// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

#include "wavecp/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wavecp/errors.hpp"

namespace wavecp {

namespace {

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

TimeSeries read_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputNotFound("cannot open '" + path.string() + "'");
    }

    TimeSeries out;
    std::string line;
    std::size_t row = 0;
    bool labeled = false;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++row;
        if (row == 1 && line.starts_with("\xef\xbb\xbf")) {
            line.erase(0, 3);  // UTF-8 byte-order mark
        }
        line = strip(line);
        if (line.empty()) continue;

        const std::size_t comma = line.find(',');
        if (!header_seen) {
            header_seen = true;
            if (comma != std::string::npos) {
                const std::string first = strip(line.substr(0, comma));
                if (first == "date") {
                    labeled = true;
                    continue;  // header row
                }
            }
            const std::string bare = strip(line);
            if (bare == "value") {
                continue;  // headerless numeric column with a name
            }
            double probe = 0.0;
            if (parse_double(bare, probe)) {
                out.values.push_back(probe);  // no header at all
                continue;
            }
            throw ParseError("unrecognized header '" + line + "'", row);
        }

        if (labeled) {
            if (comma == std::string::npos) {
                throw ParseError("expected 'date,value'", row);
            }
            const std::string date_s = strip(line.substr(0, comma));
            const std::string value_s = strip(line.substr(comma + 1));
            const auto ym = parse_year_month(date_s);
            if (!ym) {
                throw ParseError("malformed date '" + date_s + "' (want YYYY-MM)", row);
            }
            double v = 0.0;
            if (!parse_double(value_s, v)) {
                throw ParseError("non-numeric value '" + value_s + "'", row);
            }
            if (!out.start) {
                out.start = *ym;
            } else {
                const YearMonth expect = out.start->plus(static_cast<int>(out.values.size()));
                if (*ym != expect) {
                    throw ParseError("month sequence gap: expected " + expect.str() +
                                         ", found " + ym->str(),
                                     row);
                }
            }
            out.values.push_back(v);
        } else {
            double v = 0.0;
            if (!parse_double(line, v)) {
                throw ParseError("non-numeric value '" + line + "'", row);
            }
            out.values.push_back(v);
        }
    }

    if (out.values.empty()) {
        throw ParseError("no samples in '" + path.string() + "'", row);
    }
    return out;
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& x,
                      const std::string& value_name) {
    std::ofstream outf(path);
    if (!outf) {
        throw InputNotFound("cannot write '" + path.string() + "'");
    }
    char buf[64];
    if (x.start) {
        outf << "date," << value_name << "\n";
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", x.values[i]);
            outf << x.label(i).str() << ',' << buf << '\n';
        }
    } else {
        outf << value_name << "\n";
        for (double v : x.values) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            outf << buf << '\n';
        }
    }
}

}  // namespace wavecp
