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

#include "seirs/cost_effectiveness.hpp"

#include "seirs/quadrature.hpp"

namespace seirs {

EfficacySeries efficacy(const Eigen::Ref<const Eigen::VectorXd>& infectious, double initial_infectious) {
    if (initial_infectious == 0) throw Error(ErrorCode::ZeroInitial, "I(0) must be non-zero");
    EfficacySeries out;
    out.values = 1.0 - infectious.array() / initial_infectious;
    out.min = out.values.minCoeff();
    out.max = out.values.maxCoeff();
    return out;
}

double cases_averted(const TimeGrid<double>& grid, const Eigen::Ref<const Eigen::VectorXd>& infectious,
                     double initial_infectious, double t_final, double scale) {
    return scale * (t_final * initial_infectious - trapezoid(grid, infectious));
}

double effectiveness(double averted, double initial_infectious, double t_final, double scale) {
    return averted / (scale * t_final * initial_infectious);
}

double total_cost(const ControlSignal& control, const Eigen::Ref<const Eigen::VectorXd>& infectious, double unit_cost,
                  double scale) {
    if (infectious.size() != control.values.size())
        throw Error(ErrorCode::GridMismatch, "control and infectious series differ in length");
    const Eigen::VectorXd integrand = unit_cost * control.values.cwiseProduct(infectious);
    return scale * trapezoid(control.grid, integrand);
}

double acer(double total_cost, double averted) {
    if (averted == 0) throw Error(ErrorCode::ZeroAverted, "no cases averted");
    return total_cost / averted;
}

EffectivenessReport evaluate_effectiveness(const StateTrajectory<double>& states, const ControlSignal& control,
                                           double initial_infectious, const Weights& weights, double scale) {
    if (!(states.grid == control.grid)) throw Error(ErrorCode::GridMismatch, "states and control grids differ");
    const Eigen::VectorXd infectious = states.values.row(kI).transpose();
    EffectivenessReport report;
    report.efficacy = efficacy(infectious, initial_infectious);
    report.cases_averted = cases_averted(states.grid, infectious, initial_infectious, weights.t_final, scale);
    report.effectiveness = effectiveness(report.cases_averted, initial_infectious, weights.t_final, scale);
    report.total_cost = total_cost(control, infectious, weights.cost, scale);
    report.acer = acer(report.total_cost, report.cases_averted);
    report.scale = scale;
    report.initial_infectious = initial_infectious;
    report.t_final = weights.t_final;
    return report;
}

}  // namespace seirs
