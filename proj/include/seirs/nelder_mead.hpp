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

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace seirs {

struct NelderMeadOptions {
    int max_evaluations = 4000;
    double f_tolerance = 1e-13;  // absolute spread of simplex values
    double x_tolerance = 1e-10;  // max vertex distance from the best vertex
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double f = 0;
    int evaluations = 0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> history;  // best value after each iteration
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Unconstrained simplex search with dimension-adaptive coefficients.
/// The initial simplex is x0 plus step[i] along each axis.
NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                             const NelderMeadOptions& options = {});

}  // namespace seirs
