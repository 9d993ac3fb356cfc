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

#include "seirs/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "seirs/params_io.hpp"

namespace seirs {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double to_double(const std::string& cell, std::size_t line_no) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    return v;
}

}  // namespace

void write_grid_csv(std::ostream& out, const std::vector<std::string>& columns, const TimeGrid<double>& grid,
                    const Eigen::Ref<const Eigen::MatrixXd>& values) {
    if (values.rows() != static_cast<Eigen::Index>(columns.size()) || values.cols() != grid.n_nodes())
        throw Error(ErrorCode::GridMismatch, "table shape does not match header/grid");
    out << 't';
    for (const auto& c : columns) out << ',' << c;
    out << '\n';
    for (Eigen::Index k = 0; k < grid.n_nodes(); ++k) {
        out << format_double(grid.node(k));
        for (Eigen::Index r = 0; r < values.rows(); ++r) out << ',' << format_double(values(r, k));
        out << '\n';
    }
}

void write_grid_csv(const std::filesystem::path& path, const std::vector<std::string>& columns,
                    const TimeGrid<double>& grid, const Eigen::Ref<const Eigen::MatrixXd>& values) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_grid_csv(out, columns, grid, values);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

GridTable read_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, path.string() + ": empty file");
    auto header = split(line);
    if (header.size() < 2 || header.front() != "t")
        throw Error(ErrorCode::ParseError, path.string() + ": header must start with `t`");
    header.erase(header.begin());

    std::vector<double> times;
    std::vector<double> cells;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto row = split(line);
        if (row.size() != header.size() + 1)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": wrong column count");
        times.push_back(to_double(row[0], line_no));
        for (std::size_t j = 1; j < row.size(); ++j) cells.push_back(to_double(row[j], line_no));
    }
    if (times.size() < 2) throw Error(ErrorCode::ParseError, path.string() + ": need at least two rows");

    const auto n_steps = static_cast<Eigen::Index>(times.size() - 1);
    TimeGrid<double> grid(times.front(), times.back(), n_steps);
    for (Eigen::Index k = 0; k <= n_steps; ++k) {
        if (std::abs(times[static_cast<std::size_t>(k)] - grid.node(k)) > 1e-9 * std::max(1.0, std::abs(grid.tf())))
            throw Error(ErrorCode::GridMismatch, path.string() + ": time column is not uniform");
    }
    const auto n_cols = static_cast<Eigen::Index>(header.size());
    Eigen::MatrixXd values = Eigen::Map<Eigen::MatrixXd>(cells.data(), n_cols, grid.n_nodes());
    return {std::move(header), grid, std::move(values)};
}

}  // namespace seirs
