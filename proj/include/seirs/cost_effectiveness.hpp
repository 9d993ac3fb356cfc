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

#include "seirs/integrator.hpp"
#include "seirs/model.hpp"
#include "seirs/optimal_control.hpp"

namespace seirs {

struct EfficacySeries {
    Eigen::VectorXd values;  // F(t_k) = 1 - I*(t_k) / I0
    double min = 0;
    double max = 0;
};

/// A and TC are in reported-case units: model fractions times the scale s.
struct EffectivenessReport {
    EfficacySeries efficacy;
    double cases_averted = 0;   // A
    double effectiveness = 0;   // F_bar
    double total_cost = 0;      // TC
    double acer = 0;            // TC / A
    double scale = 1;           // s
    double initial_infectious = 0;
    double t_final = 0;
};

EfficacySeries efficacy(const Eigen::Ref<const Eigen::VectorXd>& infectious, double initial_infectious);

/// s (t_f I0 - integral of I*)
double cases_averted(const TimeGrid<double>& grid, const Eigen::Ref<const Eigen::VectorXd>& infectious,
                     double initial_infectious, double t_final, double scale);

/// A / (s t_f I0)
double effectiveness(double averted, double initial_infectious, double t_final, double scale);

/// s * integral of C T* I*
double total_cost(const ControlSignal& control, const Eigen::Ref<const Eigen::VectorXd>& infectious, double unit_cost,
                  double scale);

/// TC / A; throws ZeroAverted when A == 0.
double acer(double total_cost, double averted);

/// Every measure for one solved control problem. I0 is the untreated
/// equilibrium value, not the first node of the treated trajectory.
EffectivenessReport evaluate_effectiveness(const StateTrajectory<double>& states, const ControlSignal& control,
                                           double initial_infectious, const Weights& weights, double scale);

}  // namespace seirs
