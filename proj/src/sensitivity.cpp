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

#include "seirs/sensitivity.hpp"

#include <cmath>

namespace seirs {

std::string to_string(SensitivityMode mode) {
    switch (mode) {
        case SensitivityMode::Standard: return "standard";
        case SensitivityMode::Variant: return "variant";
        case SensitivityMode::Numeric: return "numeric";
    }
    return "unknown";
}

double r0_variant(const Params& p) { return p.b0 * p.epsilon / ((p.mu + p.nu) * (p.epsilon + p.nu)); }

double& parameter_ref(Params& p, std::string_view name) {
    if (name == "beta" || name == "b0") return p.b0;
    if (name == "mu") return p.mu;
    if (name == "nu") return p.nu;
    if (name == "gamma") return p.gamma;
    if (name == "epsilon") return p.epsilon;
    if (name == "b1") return p.b1;
    if (name == "c1") return p.c1;
    if (name == "phi") return p.phi;
    if (name == "s") return p.s;
    throw Error(ErrorCode::UnknownParameter, "unknown parameter '" + std::string(name) + "'");
}

double parameter_value(const Params& p, std::string_view name) {
    Params copy = p;
    return parameter_ref(copy, name);
}

SensitivityIndex sensitivity_analytic_standard(const Params& p, std::string_view parameter) {
    double value = 0;
    if (parameter == "beta") {
        value = 1.0;
    } else if (parameter == "epsilon") {
        value = p.mu / (p.epsilon + p.mu);
    } else if (parameter == "nu") {
        value = -p.nu / (p.mu + p.nu);
    } else if (parameter == "mu") {
        value = -p.mu / (p.mu + p.nu) - p.mu / (p.epsilon + p.mu);
    } else {
        throw Error(ErrorCode::UnknownParameter, "no analytic index for '" + std::string(parameter) + "'");
    }
    return {std::string(parameter), value, SensitivityMode::Standard};
}

SensitivityIndex sensitivity_analytic_variant(const Params& p, std::string_view parameter) {
    double value = 0;
    if (parameter == "beta") {
        value = 1.0;
    } else if (parameter == "epsilon") {
        value = p.nu / (p.epsilon + p.nu);
    } else if (parameter == "nu") {
        value = -p.nu / (p.mu + p.nu) - p.nu / (p.epsilon + p.nu);
    } else if (parameter == "mu") {
        value = -p.mu / (p.mu + p.nu);
    } else {
        throw Error(ErrorCode::UnknownParameter, "no analytic index for '" + std::string(parameter) + "'");
    }
    return {std::string(parameter), value, SensitivityMode::Variant};
}

SensitivityIndex sensitivity_numeric(const R0Function& r0, const Params& params, std::string_view parameter,
                                     double rel_step) {
    if (!(rel_step > 0 && rel_step <= 0.1))
        throw Error(ErrorCode::InvalidParams, "rel_step must lie in (0, 0.1]");
    const double base_value = parameter_value(params, parameter);
    const double r0_base = r0(params);
    if (r0_base == 0) throw Error(ErrorCode::DegenerateValue, "R0 vanishes at the evaluation point");
    if (base_value == 0) return {std::string(parameter), 0.0, SensitivityMode::Numeric};

    const double step = rel_step * base_value;
    Params up = params;
    Params down = params;
    parameter_ref(up, parameter) = base_value + step;
    parameter_ref(down, parameter) = base_value - step;
    const double derivative = (r0(up) - r0(down)) / (2 * step);
    return {std::string(parameter), derivative * base_value / r0_base, SensitivityMode::Numeric};
}

PerturbationPair perturbation_pair(const Params& params, std::string_view parameter, double factor,
                                   const TimeGrid<double>& grid, const StateVec<double>& y0) {
    Params perturbed = params;
    parameter_ref(perturbed, parameter) *= factor;
    validate(perturbed);
    auto run = [&](const Params& p) {
        return rk4_forward([&p](double t, const StateVec<double>& y) { return seirs_rhs(p, t, y); }, grid, y0);
    };
    return {run(params), run(perturbed), perturbed};
}

}  // namespace seirs
