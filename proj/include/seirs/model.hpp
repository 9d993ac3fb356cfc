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

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "seirs/error.hpp"

namespace seirs {

/// Epidemiological and seasonal-forcing constants. Rates are per year.
template <typename Scalar>
struct ModelParams {
    Scalar mu{};       // birth rate = mortality rate
    Scalar nu{};       // loss of infectiousness
    Scalar gamma{};    // loss of immunity
    Scalar epsilon{};  // exit from latency (unused by SIRS)
    Scalar b0{};       // mean transmission
    Scalar b1{};       // seasonal amplitude of transmission
    Scalar c1{};       // seasonal amplitude of recruitment (0 for SIRS)
    Scalar phi{};      // phase, radians
    Scalar s{};        // model fraction -> reported cases

    template <typename Other>
    ModelParams<Other> cast() const {
        return {Other(mu), Other(nu), Other(gamma), Other(epsilon), Other(b0),
                Other(b1), Other(c1), Other(phi), Other(s)};
    }

    bool operator==(const ModelParams&) const = default;
};

using Params = ModelParams<double>;

/// Compartment fractions (S, E, I, R). E stays 0 for SIRS.
template <typename Scalar>
using StateVec = Eigen::Matrix<Scalar, 4, 1>;

/// Adjoint values (p1, p2, p3, p4) paired with (S, E, I, R).
template <typename Scalar>
using CostateVec = Eigen::Matrix<Scalar, 4, 1>;

enum Compartment : Eigen::Index { kS = 0, kE = 1, kI = 2, kR = 3 };

enum class ModelKind { Sirs, Seirs };

inline std::string to_string(ModelKind kind) { return kind == ModelKind::Sirs ? "sirs" : "seirs"; }

/// Weights and bounds of the treatment control problem.
template <typename Scalar>
struct CostWeights {
    Scalar kappa1{1};
    Scalar kappa2{0.001};
    Scalar cost{1};         // per-person unit cost of treatment
    Scalar t_final{5};      // years
    Scalar control_max{1};
};

using Weights = CostWeights<double>;

/// Throws InvalidParams if any positivity or amplitude bound is violated.
template <typename Scalar>
void validate(const ModelParams<Scalar>& p) {
    auto fail = [](const char* what) { throw Error(ErrorCode::InvalidParams, what); };
    if (!(p.mu > 0)) fail("mu must be > 0");
    if (!(p.nu > 0)) fail("nu must be > 0");
    if (!(p.gamma > 0)) fail("gamma must be > 0");
    if (!(p.epsilon > 0)) fail("epsilon must be > 0");
    if (!(p.b0 > 0)) fail("b0 must be > 0");
    if (!(p.s > 0)) fail("s must be > 0");
    if (!(p.b1 >= 0 && p.b1 <= 1)) fail("b1 must lie in [0, 1]");
    if (!(p.c1 >= 0 && p.c1 <= 1)) fail("c1 must lie in [0, 1]");
    using std::isfinite;
    if (!isfinite(p.phi)) fail("phi must be finite");
}

template <typename Scalar>
void validate(const CostWeights<Scalar>& w) {
    auto fail = [](const char* what) { throw Error(ErrorCode::InvalidParams, what); };
    if (!(w.kappa1 >= 0)) fail("kappa1 must be >= 0");
    if (!(w.kappa2 > 0)) fail("kappa2 must be > 0");
    if (!(w.t_final > 0)) fail("t_final must be > 0");
    if (!(w.control_max > 0)) fail("control_max must be > 0");
    if (!(w.cost >= 0)) fail("cost must be >= 0");
}

namespace detail {
template <typename Scalar>
Scalar seasonal(Scalar amplitude, Scalar phi, Scalar t) {
    using std::cos;
    return Scalar(1) + amplitude * cos(Scalar(2) * std::numbers::pi_v<Scalar> * t + phi);
}
}  // namespace detail

/// b0 (1 + b1 cos(2 pi t + phi))
template <typename Scalar>
Scalar beta_at(const ModelParams<Scalar>& p, Scalar t) {
    return p.b0 * detail::seasonal(p.b1, p.phi, t);
}

/// mu (1 + c1 cos(2 pi t + phi))
template <typename Scalar>
Scalar lambda_at(const ModelParams<Scalar>& p, Scalar t) {
    return p.mu * detail::seasonal(p.c1, p.phi, t);
}

template <typename Scalar>
StateVec<Scalar> sirs_rhs(const ModelParams<Scalar>& p, Scalar t, const StateVec<Scalar>& y) {
    const Scalar beta = beta_at(p, t);
    const Scalar infection = beta * y[kS] * y[kI];
    StateVec<Scalar> dy;
    dy[kS] = p.mu - p.mu * y[kS] - infection + p.gamma * y[kR];
    dy[kE] = Scalar(0);
    dy[kI] = infection - p.nu * y[kI] - p.mu * y[kI];
    dy[kR] = p.nu * y[kI] - p.mu * y[kR] - p.gamma * y[kR];
    return dy;
}

template <typename Scalar>
StateVec<Scalar> seirs_rhs(const ModelParams<Scalar>& p, Scalar t, const StateVec<Scalar>& y) {
    const Scalar infection = beta_at(p, t) * y[kS] * y[kI];
    StateVec<Scalar> dy;
    dy[kS] = lambda_at(p, t) - p.mu * y[kS] - infection + p.gamma * y[kR];
    dy[kE] = infection - (p.mu + p.epsilon) * y[kE];
    dy[kI] = p.epsilon * y[kE] - (p.mu + p.nu) * y[kI];
    dy[kR] = p.nu * y[kI] - (p.mu + p.gamma) * y[kR];
    return dy;
}

/// SEIRS with treatment moving T*I per unit time from I to R.
template <typename Scalar>
StateVec<Scalar> controlled_seirs_rhs(const ModelParams<Scalar>& p, Scalar t, const StateVec<Scalar>& y,
                                      Scalar treatment) {
    StateVec<Scalar> dy = seirs_rhs(p, t, y);
    const Scalar treated = treatment * y[kI];
    dy[kI] -= treated;
    dy[kR] += treated;
    return dy;
}

template <typename Scalar>
StateVec<Scalar> model_rhs(ModelKind kind, const ModelParams<Scalar>& p, Scalar t, const StateVec<Scalar>& y) {
    return kind == ModelKind::Sirs ? sirs_rhs(p, t, y) : seirs_rhs(p, t, y);
}

/// Costate derivative, -dH/d(S,E,I,R) of the treatment Hamiltonian.
template <typename Scalar>
CostateVec<Scalar> adjoint_rhs(const ModelParams<Scalar>& p, const CostWeights<Scalar>& w, Scalar t,
                               const StateVec<Scalar>& y, const CostateVec<Scalar>& q, Scalar treatment) {
    const Scalar beta = beta_at(p, t);
    CostateVec<Scalar> dq;
    dq[0] = q[0] * (p.mu + beta * y[kI]) - beta * y[kI] * q[1];
    dq[1] = q[1] * (p.mu + p.epsilon) - p.epsilon * q[2];
    dq[2] = -w.kappa1 + beta * q[0] * y[kS] - q[1] * beta * y[kS] + q[2] * (p.mu + p.nu + treatment) -
            q[3] * (p.nu + treatment);
    dq[3] = -p.gamma * q[0] + q[3] * (p.mu + p.gamma);
    return dq;
}

/// kappa1 I + kappa2 T^2 + p . f(t, y, T). Test helper for adjoint checks.
template <typename Scalar>
Scalar hamiltonian(const ModelParams<Scalar>& p, const CostWeights<Scalar>& w, Scalar t, const StateVec<Scalar>& y,
                   const CostateVec<Scalar>& q, Scalar treatment) {
    return w.kappa1 * y[kI] + w.kappa2 * treatment * treatment + q.dot(controlled_seirs_rhs(p, t, y, treatment));
}

}  // namespace seirs
