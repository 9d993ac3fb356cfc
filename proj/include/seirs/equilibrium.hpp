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

#include "seirs/error.hpp"
#include "seirs/model.hpp"

namespace seirs {

/// b0 / (nu + mu)
template <typename Scalar>
Scalar r0_sirs(const ModelParams<Scalar>& p) {
    return p.b0 / (p.nu + p.mu);
}

/// b0 eps / ((mu + nu)(eps + mu)), with beta held at its yearly mean.
template <typename Scalar>
Scalar r0_seirs(const ModelParams<Scalar>& p) {
    return p.b0 * p.epsilon / ((p.mu + p.nu) * (p.epsilon + p.mu));
}

// Both equilibria are for the averaged system (beta = b0, lambda = mu). The
// seasonal system has no fixed point; its annual mean sits here.

template <typename Scalar>
StateVec<Scalar> endemic_equilibrium_seirs(const ModelParams<Scalar>& p) {
    const Scalar r0 = r0_seirs(p);
    if (!(r0 > Scalar(1))) throw Error(ErrorCode::NoEndemicEquilibrium, "R0 <= 1");
    StateVec<Scalar> y;
    y[kS] = Scalar(1) / r0;
    y[kI] = (Scalar(1) - y[kS]) / (Scalar(1) + (p.mu + p.nu) / p.epsilon + p.nu / (p.mu + p.gamma));
    y[kE] = (p.mu + p.nu) * y[kI] / p.epsilon;
    y[kR] = p.nu * y[kI] / (p.mu + p.gamma);
    return y;
}

template <typename Scalar>
StateVec<Scalar> endemic_equilibrium_sirs(const ModelParams<Scalar>& p) {
    const Scalar r0 = r0_sirs(p);
    if (!(r0 > Scalar(1))) throw Error(ErrorCode::NoEndemicEquilibrium, "R0 <= 1");
    StateVec<Scalar> y;
    y[kS] = Scalar(1) / r0;
    y[kE] = Scalar(0);
    y[kI] = (Scalar(1) - y[kS]) / (Scalar(1) + p.nu / (p.mu + p.gamma));
    y[kR] = p.nu * y[kI] / (p.mu + p.gamma);
    return y;
}

template <typename Scalar>
StateVec<Scalar> endemic_equilibrium(ModelKind kind, const ModelParams<Scalar>& p) {
    return kind == ModelKind::Sirs ? endemic_equilibrium_sirs(p) : endemic_equilibrium_seirs(p);
}

template <typename Scalar>
Scalar basic_reproduction_number(ModelKind kind, const ModelParams<Scalar>& p) {
    return kind == ModelKind::Sirs ? r0_sirs(p) : r0_seirs(p);
}

}  // namespace seirs
