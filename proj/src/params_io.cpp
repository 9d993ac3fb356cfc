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

#include "seirs/params_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

namespace seirs {

namespace {

using Field = double Params::*;

constexpr std::array<std::pair<std::string_view, Field>, 9> kFields{{
    {"mu", &Params::mu},
    {"nu", &Params::nu},
    {"gamma", &Params::gamma},
    {"epsilon", &Params::epsilon},
    {"b0", &Params::b0},
    {"b1", &Params::b1},
    {"c1", &Params::c1},
    {"phi", &Params::phi},
    {"s", &Params::s},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
    double value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

Params parse_params(std::string_view text) {
    Params params;
    std::array<bool, kFields.size()> seen{};
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected `key = value`");
        const auto key = trim(line.substr(0, eq));
        const auto raw = trim(line.substr(eq + 1));

        std::size_t idx = 0;
        while (idx < kFields.size() && kFields[idx].first != key) ++idx;
        if (idx == kFields.size())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unknown key '" +
                                                   std::string(key) + "'");
        if (seen[idx])
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": duplicate key '" +
                                                   std::string(key) + "'");
        const auto value = parse_number(raw);
        if (!value)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" +
                                                   std::string(raw) + "'");
        params.*(kFields[idx].second) = *value;
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < kFields.size(); ++i) {
        if (!seen[i]) throw Error(ErrorCode::ParseError, "missing key '" + std::string(kFields[i].first) + "'");
    }
    validate(params);
    return params;
}

Params load_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open params file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_params(buffer.str());
}

std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << value;
    return out.str();
}

std::string format_params(const Params& params) {
    std::string out;
    for (const auto& [key, field] : kFields) {
        out += key;
        out += " = ";
        out += format_double(params.*field);
        out += '\n';
    }
    return out;
}

void save_params(const std::filesystem::path& path, const Params& params) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << format_params(params);
}

}  // namespace seirs
