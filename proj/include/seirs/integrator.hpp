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
#include <span>
#include <string>

#include <Eigen/Dense>

#include "seirs/error.hpp"

namespace seirs {

/// Uniform grid t0 + k h, k = 0..n_steps.
template <typename Scalar = double>
class TimeGrid {
public:
    TimeGrid(Scalar t0, Scalar tf, Eigen::Index n_steps) : t0_(t0), tf_(tf), n_steps_(n_steps) {
        if (!(tf > t0)) throw Error(ErrorCode::InvalidParams, "time grid needs tf > t0");
        if (n_steps < 1) throw Error(ErrorCode::InvalidParams, "time grid needs at least one step");
        h_ = (tf - t0) / Scalar(n_steps);
    }

    /// Smallest grid on [t0, tf] whose step does not exceed max_step.
    static TimeGrid with_max_step(Scalar t0, Scalar tf, Scalar max_step) {
        using std::ceil;
        const Scalar ratio = (tf - t0) / max_step;
        auto n = static_cast<Eigen::Index>(ceil(ratio - Scalar(1e-9) * ratio));
        return TimeGrid(t0, tf, std::max<Eigen::Index>(n, 1));
    }

    Scalar t0() const { return t0_; }
    Scalar tf() const { return tf_; }
    Eigen::Index n_steps() const { return n_steps_; }
    Eigen::Index n_nodes() const { return n_steps_ + 1; }
    Scalar step() const { return h_; }

    Scalar node(Eigen::Index k) const { return k == n_steps_ ? tf_ : t0_ + Scalar(k) * h_; }

    bool operator==(const TimeGrid&) const = default;

private:
    Scalar t0_;
    Scalar tf_;
    Eigen::Index n_steps_;
    Scalar h_;
};

/// Per-node vector values; column k belongs to grid.node(k).
template <typename Scalar, int Dim>
struct Trajectory {
    using Vec = Eigen::Matrix<Scalar, Dim, 1>;

    TimeGrid<Scalar> grid;
    Eigen::Matrix<Scalar, Dim, Eigen::Dynamic> values;

    Vec at(Eigen::Index k) const { return values.col(k); }
    Vec front() const { return values.col(0); }
    Vec back() const { return values.col(values.cols() - 1); }

    /// Linear interpolation; callers guarantee t lies on the grid span.
    Vec interpolate(Scalar t) const {
        using std::abs;
        using std::floor;
        using std::round;
        const Scalar x = (t - grid.t0()) / grid.step();
        const Scalar nearest = round(x);
        if (abs(x - nearest) < Scalar(1e-9)) {
            return values.col(std::clamp<Eigen::Index>(static_cast<Eigen::Index>(nearest), 0, grid.n_steps()));
        }
        auto k = static_cast<Eigen::Index>(floor(x));
        k = std::clamp<Eigen::Index>(k, 0, grid.n_steps() - 1);
        const Scalar w = x - Scalar(k);
        return (Scalar(1) - w) * values.col(k) + w * values.col(k + 1);
    }
};

template <typename Scalar>
using StateTrajectory = Trajectory<Scalar, 4>;

namespace detail {

template <typename Scalar, int Dim>
void check_finite(const Eigen::Matrix<Scalar, Dim, 1>& y, Scalar t) {
    if (!y.allFinite()) throw Error(ErrorCode::NonFiniteState, "state became non-finite at t = " + std::to_string(double(t)));
}

}  // namespace detail

/// One classical RK4 step of signed size h from (t, y).
template <typename Scalar, int Dim, typename Rhs>
Eigen::Matrix<Scalar, Dim, 1> rk4_step(Rhs& rhs, Scalar t, const Eigen::Matrix<Scalar, Dim, 1>& y, Scalar h) {
    using Vec = Eigen::Matrix<Scalar, Dim, 1>;
    const Scalar half = h / Scalar(2);
    const Vec k1 = rhs(t, y);
    const Vec k2 = rhs(t + half, Vec(y + half * k1));
    const Vec k3 = rhs(t + half, Vec(y + half * k2));
    const Vec k4 = rhs(t + h, Vec(y + h * k3));
    return y + (h / Scalar(6)) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
}

/// Integrates from grid.t0() to grid.tf(); values[0] = y0.
template <typename Scalar, int Dim, typename Rhs>
Trajectory<Scalar, Dim> rk4_forward(Rhs&& rhs, const TimeGrid<Scalar>& grid, const Eigen::Matrix<Scalar, Dim, 1>& y0) {
    Trajectory<Scalar, Dim> traj{grid, Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>(y0.rows(), grid.n_nodes())};
    traj.values.col(0) = y0;
    detail::check_finite(y0, grid.t0());
    Eigen::Matrix<Scalar, Dim, 1> y = y0;
    for (Eigen::Index k = 0; k < grid.n_steps(); ++k) {
        y = rk4_step(rhs, grid.node(k), y, grid.step());
        detail::check_finite(y, grid.node(k + 1));
        traj.values.col(k + 1) = y;
    }
    return traj;
}

/// Integrates from grid.tf() down to grid.t0(); values[n_steps] = y_tf.
template <typename Scalar, int Dim, typename Rhs>
Trajectory<Scalar, Dim> rk4_backward(Rhs&& rhs, const TimeGrid<Scalar>& grid,
                                     const Eigen::Matrix<Scalar, Dim, 1>& y_tf) {
    Trajectory<Scalar, Dim> traj{grid, Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>(y_tf.rows(), grid.n_nodes())};
    const Eigen::Index n = grid.n_steps();
    traj.values.col(n) = y_tf;
    detail::check_finite(y_tf, grid.tf());
    Eigen::Matrix<Scalar, Dim, 1> y = y_tf;
    for (Eigen::Index k = n; k > 0; --k) {
        y = rk4_step(rhs, grid.node(k), y, -grid.step());
        detail::check_finite(y, grid.node(k - 1));
        traj.values.col(k - 1) = y;
    }
    return traj;
}

/// Linear interpolation at arbitrary times; column j holds times[j].
template <typename Scalar, int Dim>
Eigen::Matrix<Scalar, Dim, Eigen::Dynamic> sample(const Trajectory<Scalar, Dim>& traj, std::span<const Scalar> times) {
    using std::abs;
    const Scalar slack = Scalar(1e-12) * std::max(Scalar(1), abs(traj.grid.tf()) + abs(traj.grid.t0()));
    Eigen::Matrix<Scalar, Dim, Eigen::Dynamic> out(traj.values.rows(), static_cast<Eigen::Index>(times.size()));
    for (std::size_t j = 0; j < times.size(); ++j) {
        const Scalar t = times[j];
        if (!(t >= traj.grid.t0() - slack && t <= traj.grid.tf() + slack))
            throw Error(ErrorCode::OutOfRange, "sample time " + std::to_string(double(t)) + " outside grid");
        out.col(static_cast<Eigen::Index>(j)) = traj.interpolate(t);
    }
    return out;
}

}  // namespace seirs
