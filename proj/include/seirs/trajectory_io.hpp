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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "seirs/integrator.hpp"

namespace seirs {

inline const std::vector<std::string> kStateColumns{"S", "E", "I", "R"};
inline const std::vector<std::string> kCostateColumns{"p1", "p2", "p3", "p4"};
inline const std::vector<std::string> kControlColumns{"T"};

/// A CSV whose first column is `t` on a uniform grid.
struct GridTable {
    std::vector<std::string> columns;  // excluding `t`
    TimeGrid<double> grid;
    Eigen::MatrixXd values;            // columns.size() x grid.n_nodes()
};

void write_grid_csv(std::ostream& out, const std::vector<std::string>& columns, const TimeGrid<double>& grid,
                    const Eigen::Ref<const Eigen::MatrixXd>& values);
void write_grid_csv(const std::filesystem::path& path, const std::vector<std::string>& columns,
                    const TimeGrid<double>& grid, const Eigen::Ref<const Eigen::MatrixXd>& values);

template <int Dim>
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory<double, Dim>& traj,
                          const std::vector<std::string>& columns) {
    write_grid_csv(path, columns, traj.grid, traj.values);
}

/// Reads a `t,...` CSV; throws ParseError on malformed rows and GridMismatch
/// when the time column is not uniform.
GridTable read_grid_csv(const std::filesystem::path& path);

}  // namespace seirs
