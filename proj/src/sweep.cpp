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

#include <algorithm>
#include <cmath>

#include "seirs/optimal_control.hpp"
#include "seirs/quadrature.hpp"

namespace seirs {

namespace {

void check_grid(const TimeGrid<double>& grid, const Weights& weights) {
    if (std::abs((grid.tf() - grid.t0()) - weights.t_final) > 1e-9 * std::max(1.0, weights.t_final))
        throw Error(ErrorCode::GridMismatch, "grid span does not equal t_final");
}

template <typename A, typename B>
double relative_change(const A& next, const B& previous) {
    const double diff = (next - previous).cwiseAbs().maxCoeff();
    const double scale = next.cwiseAbs().maxCoeff();
    if (diff == 0) return 0;
    return diff / std::max(scale, 1e-300);
}

}  // namespace

double objective(const StateTrajectory<double>& states, const ControlSignal& control, const Weights& weights) {
    if (!(states.grid == control.grid) || control.values.size() != control.grid.n_nodes())
        throw Error(ErrorCode::GridMismatch, "states and control live on different grids");
    const Eigen::VectorXd integrand = weights.kappa1 * states.values.row(kI).transpose().array() +
                                      weights.kappa2 * control.values.array().square();
    return trapezoid(states.grid, integrand);
}

StateTrajectory<double> solve_states(const Params& params, const StateVec<double>& y0, const ControlSignal& control) {
    return rk4_forward(
        [&](double t, const StateVec<double>& y) { return controlled_seirs_rhs(params, t, y, control.at(t)); },
        control.grid, y0);
}

Trajectory<double, 4> solve_costates(const Params& params, const Weights& weights,
                                     const StateTrajectory<double>& states, const ControlSignal& control) {
    return rk4_backward(
        [&](double t, const CostateVec<double>& q) {
            return adjoint_rhs(params, weights, t, states.interpolate(t), q, control.at(t));
        },
        control.grid, CostateVec<double>::Zero().eval());
}

ControlSignal project_control(const StateTrajectory<double>& states, const Trajectory<double, 4>& costates,
                              const Weights& weights) {
    ControlSignal out{states.grid, Eigen::VectorXd(states.grid.n_nodes())};
    for (Eigen::Index k = 0; k < out.values.size(); ++k) {
        out.values[k] = extremal_control(costates.values(2, k), costates.values(3, k), states.values(kI, k),
                                         weights.kappa2, weights.control_max);
    }
    return out;
}

SweepSolution forward_backward_sweep(const Params& params, const Weights& weights, const StateVec<double>& y0,
                                     const TimeGrid<double>& grid, const SweepOptions& options) {
    validate(params);
    validate(weights);
    check_grid(grid, weights);
    if (!(options.relaxation > 0 && options.relaxation <= 1))
        throw Error(ErrorCode::InvalidParams, "relaxation must lie in (0, 1]");
    if (!(options.tolerance > 0)) throw Error(ErrorCode::InvalidParams, "tolerance must be > 0");

    ControlSignal control = ControlSignal::zero(grid);
    auto states = solve_states(params, y0, control);
    auto costates = solve_costates(params, weights, states, control);

    SweepSolution sol{states, costates, control};
    double change = 0;
    int iteration = 0;
    bool converged = false;
    while (iteration < options.max_iterations) {
        ++iteration;
        const ControlSignal projected = project_control(states, costates, weights);
        ControlSignal next{grid, (1.0 - options.relaxation) * control.values + options.relaxation * projected.values};
        next.values = next.values.cwiseMax(0.0).cwiseMin(weights.control_max);

        auto next_states = solve_states(params, y0, next);
        auto next_costates = solve_costates(params, weights, next_states, next);

        change = std::max({relative_change(next.values, control.values),
                           relative_change(next_states.values, states.values),
                           relative_change(next_costates.values, costates.values)});
        control = std::move(next);
        states = std::move(next_states);
        costates = std::move(next_costates);
        if (change < options.tolerance) {
            converged = true;
            break;
        }
    }

    sol.states = std::move(states);
    sol.costates = std::move(costates);
    sol.control = std::move(control);
    sol.objective = objective(sol.states, sol.control, weights);
    sol.iterations = iteration;
    sol.converged = converged;
    sol.final_change = change;
    return sol;
}

GradientCheck adjoint_gradient_check(const Params& params, const Weights& weights, const StateVec<double>& y0,
                                     const ControlSignal& control, Eigen::Index node, double fd_step) {
    if (node < 0 || node >= control.values.size()) throw Error(ErrorCode::OutOfRange, "node index outside grid");
    const double tk = control.values[node];
    if (!(fd_step > 0) || tk - fd_step < 0 || tk + fd_step > weights.control_max)
        throw Error(ErrorCode::OutOfRange, "perturbed control leaves [0, T_max]");

    const auto states = solve_states(params, y0, control);
    const auto costates = solve_costates(params, weights, states, control);
    GradientCheck out;
    out.adjoint = trapezoid_weight(control.grid, node) *
                  (2.0 * weights.kappa2 * tk - (costates.values(2, node) - costates.values(3, node)) * states.values(kI, node));

    ControlSignal up = control;
    ControlSignal down = control;
    up.values[node] += fd_step;
    down.values[node] -= fd_step;
    const double j_up = objective(solve_states(params, y0, up), up, weights);
    const double j_down = objective(solve_states(params, y0, down), down, weights);
    out.finite_difference = (j_up - j_down) / (2.0 * fd_step);
    return out;
}

}  // namespace seirs
