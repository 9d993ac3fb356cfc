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

#include <numbers>
#include <random>

#include "seirs/model.hpp"

namespace seirs::testing {

inline constexpr double kPi = std::numbers::pi;

/// Fitted SEIRS row: mu, nu, gamma, eps, b0, b1, c1, phi = 7 pi / 5, s.
inline Params table_seirs() { return {0.0113, 36.0, 1.8, 91.0, 88.25, 0.17, 0.17, 7 * kPi / 5, 35000.0}; }

/// Fitted SIRS row. epsilon is carried but unused.
inline Params table_sirs() { return {0.0113, 36.0, 1.8, 91.0, 74.2, 0.14, 0.0, 7 * kPi / 5, 35000.0}; }

/// Control scenario: SEIRS row with phi = pi / 2.
inline Params control_scenario() {
    Params p = table_seirs();
    p.phi = kPi / 2;
    return p;
}

inline Weights control_weights() { return Weights{1.0, 0.001, 1.0, 5.0, 1.0}; }

/// Random valid parameters in ranges that bracket the fitted values.
inline Params random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Params p;
    p.mu = 0.005 + 0.02 * u(rng);
    p.nu = 10 + 40 * u(rng);
    p.gamma = 0.5 + 2.5 * u(rng);
    p.epsilon = 20 + 100 * u(rng);
    p.b0 = 10 + 290 * u(rng);
    p.b1 = u(rng);
    p.c1 = u(rng);
    p.phi = 2 * kPi * u(rng);
    p.s = 1e3 + 1e5 * u(rng);
    return p;
}

/// Random point on the probability simplex.
inline StateVec<double> random_state(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    StateVec<double> y;
    for (int i = 0; i < 4; ++i) y[i] = e(rng);
    return y / y.sum();
}

}  // namespace seirs::testing
