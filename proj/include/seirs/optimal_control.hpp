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

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "seirs/integrator.hpp"
#include "seirs/model.hpp"

namespace seirs {

/// Treatment intensity at the grid nodes, bounded in [0, T_max].
struct ControlSignal {
    TimeGrid<double> grid;
    Eigen::VectorXd values;

    static ControlSignal zero(const TimeGrid<double>& grid) { return {grid, Eigen::VectorXd::Zero(grid.n_nodes())}; }

    /// Linear interpolation between nodes.
    double at(double t) const {
        const double x = (t - grid.t0()) / grid.step();
        auto k = static_cast<Eigen::Index>(std::floor(x));
        k = std::clamp<Eigen::Index>(k, 0, grid.n_steps() - 1);
        const double w = x - static_cast<double>(k);
        return (1.0 - w) * values[k] + w * values[k + 1];
    }
};

struct SweepOptions {
    double relaxation = 0.5;  // weight of the new projection in the convex update
    double tolerance = 1e-4;  // max relative change of states, costates and control
    int max_iterations = 500;
};

struct SweepSolution {
    StateTrajectory<double> states;
    Trajectory<double, 4> costates;
    ControlSignal control;
    double objective = 0;
    int iterations = 0;
    bool converged = false;
    double final_change = 0;  // sweep: last relative change; oracle: residual norm
};

/// min{max{0, (p3 - p4) I / (2 kappa2)}, T_max}
inline double extremal_control(double p3, double p4, double infectious, double kappa2, double control_max) {
    return std::min(std::max(0.0, (p3 - p4) * infectious / (2.0 * kappa2)), control_max);
}

/// Trapezoid quadrature of kappa1 I + kappa2 T^2; throws GridMismatch.
double objective(const StateTrajectory<double>& states, const ControlSignal& control, const Weights& weights);

/// Controlled SEIRS forward from y0 under a fixed control.
StateTrajectory<double> solve_states(const Params& params, const StateVec<double>& y0, const ControlSignal& control);

/// Adjoint backward from zero terminal data along fixed states and control.
Trajectory<double, 4> solve_costates(const Params& params, const Weights& weights,
                                     const StateTrajectory<double>& states, const ControlSignal& control);

/// Pointwise extremal control for the given states and costates.
ControlSignal project_control(const StateTrajectory<double>& states, const Trajectory<double, 4>& costates,
                              const Weights& weights);

/// Forward-backward sweep starting from T = 0. Non-convergence is reported
/// through `converged`, never thrown.
SweepSolution forward_backward_sweep(const Params& params, const Weights& weights, const StateVec<double>& y0,
                                     const TimeGrid<double>& grid, const SweepOptions& options = {});

struct GradientCheck {
    double adjoint = 0;
    double finite_difference = 0;
};

/// dJ/dT_k from the adjoint against a central difference of J with the
/// forward solve re-run at T_k +/- fd_step.
GradientCheck adjoint_gradient_check(const Params& params, const Weights& weights, const StateVec<double>& y0,
                                     const ControlSignal& control, Eigen::Index node, double fd_step);

struct BvpOptions {
    double tolerance = 1e-10;     // infinity norm of continuity + terminal residuals
    int max_iterations = 60;
    double segment_length = 0.05; // years per shooting segment
};

/// Newton shooting on the coupled state/costate system with the control
/// eliminated through extremal_control. The horizon is split into short
/// segments joined by continuity conditions. Throws NewtonDivergence.
SweepSolution solve_bvp_oracle(const Params& params, const Weights& weights, const StateVec<double>& y0,
                               const TimeGrid<double>& grid, const BvpOptions& options = {});

}  // namespace seirs
