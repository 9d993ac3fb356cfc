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

#include <Eigen/Dense>

#include "seirs/error.hpp"
#include "seirs/integrator.hpp"

namespace seirs {

/// Composite trapezoid rule on a uniform grid (Neumaier-compensated sum).
inline double trapezoid(const TimeGrid<double>& grid, const Eigen::Ref<const Eigen::VectorXd>& values) {
    if (values.size() != grid.n_nodes()) throw Error(ErrorCode::GridMismatch, "series length does not match grid");
    double sum = 0;
    double compensation = 0;
    const Eigen::Index n = values.size();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double term = (k == 0 || k == n - 1) ? 0.5 * values[k] : values[k];
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            compensation += (sum - t) + term;
        } else {
            compensation += (term - t) + sum;
        }
        sum = t;
    }
    return grid.step() * (sum + compensation);
}

/// Weight of node k in trapezoid().
inline double trapezoid_weight(const TimeGrid<double>& grid, Eigen::Index k) {
    return (k == 0 || k == grid.n_steps()) ? 0.5 * grid.step() : grid.step();
}

}  // namespace seirs
