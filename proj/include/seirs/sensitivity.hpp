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
#include <string>
#include <string_view>
#include <utility>

#include "seirs/integrator.hpp"
#include "seirs/model.hpp"

namespace seirs {

/// Which R0 expression (or method) produced an index.
///   Standard: R0 = b0 eps / ((mu + nu)(eps + mu))
///   Variant:  R0 = b0 eps / ((mu + nu)(eps + nu)); the reference index values
///             follow this denominator rather than the standard one.
///   Numeric:  central difference of a caller-supplied R0 function.
enum class SensitivityMode { Standard, Variant, Numeric };

std::string to_string(SensitivityMode mode);

struct SensitivityIndex {
    std::string parameter;
    double value = 0;
    SensitivityMode mode = SensitivityMode::Standard;
};

using R0Function = std::function<double(const Params&)>;

double r0_variant(const Params& params);

/// Parameters accepted by the analytic modes.
inline constexpr std::string_view kSensitivityParameters[] = {"beta", "epsilon", "nu", "mu"};

/// Mutable access to a field by name; "beta" aliases b0. Throws UnknownParameter.
double& parameter_ref(Params& params, std::string_view name);
double parameter_value(const Params& params, std::string_view name);

SensitivityIndex sensitivity_analytic_standard(const Params& params, std::string_view parameter);
SensitivityIndex sensitivity_analytic_variant(const Params& params, std::string_view parameter);

/// (dR0/dp)(p/R0) by central differences with step rel_step * p.
SensitivityIndex sensitivity_numeric(const R0Function& r0, const Params& params, std::string_view parameter,
                                     double rel_step = 1e-5);

struct PerturbationPair {
    StateTrajectory<double> baseline;
    StateTrajectory<double> perturbed;
    Params perturbed_params;
};

/// SEIRS trajectories before and after scaling one parameter by factor.
PerturbationPair perturbation_pair(const Params& params, std::string_view parameter, double factor,
                                   const TimeGrid<double>& grid, const StateVec<double>& y0);

}  // namespace seirs
