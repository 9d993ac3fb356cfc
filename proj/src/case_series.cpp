/*
 Copyright 2026 The seirs-control Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "seirs/error.hpp"
#include "seirs/fitting.hpp"
#include "seirs/params_io.hpp"

namespace seirs {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

YearMonth YearMonth::plus(int months) const {
    const int index = year * 12 + (month - 1) + months;
    return {index / 12, index % 12 + 1};
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

YearMonth YearMonth::parse(std::string_view text) {
    text = trim(text);
    if (text.size() != 7 || text[4] != '-') throw Error(ErrorCode::ParseError, "bad month '" + std::string(text) + "'");
    YearMonth ym;
    auto y = std::from_chars(text.data(), text.data() + 4, ym.year);
    auto m = std::from_chars(text.data() + 5, text.data() + 7, ym.month);
    if (y.ec != std::errc() || y.ptr != text.data() + 4 || m.ec != std::errc() || m.ptr != text.data() + 7 ||
        ym.month < 1 || ym.month > 12)
        throw Error(ErrorCode::ParseError, "bad month '" + std::string(text) + "'");
    return ym;
}

CaseSeries parse_case_series(std::string_view text) {
    std::vector<double> counts;
    YearMonth start;
    YearMonth expected;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "month,cases") throw Error(ErrorCode::ParseError, "header must be `month,cases`");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two columns");
        const auto month = YearMonth::parse(line.substr(0, comma));
        const auto raw = trim(line.substr(comma + 1));
        double value = 0;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
        if (ec != std::errc() || ptr != raw.data() + raw.size())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad count");
        if (value < 0) throw Error(ErrorCode::NegativeCount, "line " + std::to_string(line_no) + ": negative count");

        if (counts.empty()) {
            start = month;
        } else if (!(month == expected)) {
            throw Error(ErrorCode::GapError, "line " + std::to_string(line_no) + ": expected " + expected.to_string() +
                                                 ", got " + month.to_string());
        }
        expected = month.next();
        counts.push_back(value);
    }
    if (counts.size() < 2) throw Error(ErrorCode::ParseError, "case series needs at least two months");
    return {start, Eigen::Map<Eigen::VectorXd>(counts.data(), static_cast<Eigen::Index>(counts.size()))};
}

CaseSeries load_case_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open data file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_case_series(buffer.str());
}

void save_case_series(const std::filesystem::path& path, const CaseSeries& series) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << "month,cases\n";
    for (Eigen::Index k = 0; k < series.size(); ++k)
        out << series.start.plus(static_cast<int>(k)).to_string() << ',' << format_double(series.counts[k]) << '\n';
}

}  // namespace seirs
