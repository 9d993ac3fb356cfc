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

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "seirs/optimal_control.hpp"

namespace seirs {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Coupled state/costate system with the control eliminated pointwise.
struct CoupledSystem {
    const Params& params;
    const Weights& weights;

    Vec8 operator()(double t, const Vec8& z) const {
        const StateVec<double> y = z.head<4>();
        const CostateVec<double> q = z.tail<4>();
        const double control = extremal_control(q[2], q[3], y[kI], weights.kappa2, weights.control_max);
        Vec8 dz;
        dz.head<4>() = controlled_seirs_rhs(params, t, y, control);
        dz.tail<4>() = adjoint_rhs(params, weights, t, y, q, control);
        return dz;
    }
};

class MultipleShooting {
public:
    MultipleShooting(const Params& params, const Weights& weights, const StateVec<double>& y0,
                     const TimeGrid<double>& grid, Eigen::Index segments)
        : system_{params, weights}, y0_(y0), grid_(grid) {
        const Eigen::Index n = grid.n_steps();
        for (Eigen::Index j = 0; j <= segments; ++j) bounds_.push_back(j * n / segments);
    }

    Eigen::Index segments() const { return static_cast<Eigen::Index>(bounds_.size()) - 1; }
    Eigen::Index unknowns() const { return 8 * (segments() - 1) + 4; }
    Eigen::Index boundary_node(Eigen::Index j) const { return bounds_[static_cast<std::size_t>(j)]; }

    Vec8 segment_start(const Eigen::VectorXd& x, Eigen::Index j) const {
        Vec8 z;
        if (j == 0) {
            z.head<4>() = y0_;
            z.tail<4>() = x.head<4>();
        } else {
            z = x.segment<8>(4 + 8 * (j - 1));
        }
        return z;
    }

    /// Integrates segment j from z; when `nodes` is non-null, stores every grid node.
    Vec8 propagate(Eigen::Index j, const Vec8& z, Eigen::Matrix<double, 8, Eigen::Dynamic>* nodes = nullptr) const {
        Vec8 w = z;
        const Eigen::Index first = boundary_node(j);
        const Eigen::Index last = boundary_node(j + 1);
        if (nodes) nodes->col(first) = w;
        for (Eigen::Index k = first; k < last; ++k) {
            w = rk4_step(system_, grid_.node(k), w, grid_.step());
            if (!w.allFinite()) throw Error(ErrorCode::NonFiniteState, "shooting segment diverged");
            if (nodes) nodes->col(k + 1) = w;
        }
        return w;
    }

    Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
        const Eigen::Index m = segments();
        Eigen::VectorXd r(unknowns());
        for (Eigen::Index j = 0; j < m; ++j) {
            const Vec8 end = propagate(j, segment_start(x, j));
            if (j + 1 < m) {
                r.segment<8>(8 * j) = end - segment_start(x, j + 1);
            } else {
                r.tail<4>() = end.tail<4>();
            }
        }
        return r;
    }

    Eigen::SparseMatrix<double> jacobian(const Eigen::VectorXd& x) const {
        const Eigen::Index m = segments();
        std::vector<Eigen::Triplet<double>> triplets;
        for (Eigen::Index j = 0; j < m; ++j) {
            const Vec8 z = segment_start(x, j);
            Mat8 d;
            for (int i = 0; i < 8; ++i) {
                const double delta = 1e-6 * std::max(std::abs(z[i]), 1e-2);
                Vec8 up = z;
                Vec8 down = z;
                up[i] += delta;
                down[i] -= delta;
                d.col(i) = (propagate(j, up) - propagate(j, down)) / (2.0 * delta);
            }
            const Eigen::Index row0 = 8 * j;
            const int first_col = j == 0 ? 4 : 0;  // segment 0 starts at the fixed state
            const Eigen::Index col0 = j == 0 ? -4 : 4 + 8 * (j - 1);
            const int rows = j + 1 < m ? 8 : 4;
            const int row_offset = j + 1 < m ? 0 : 4;
            for (int r = 0; r < rows; ++r) {
                for (int c = first_col; c < 8; ++c) triplets.emplace_back(row0 + r, col0 + c, d(row_offset + r, c));
            }
            if (j + 1 < m) {
                const Eigen::Index next0 = 4 + 8 * j;
                for (int r = 0; r < 8; ++r) triplets.emplace_back(row0 + r, next0 + r, -1.0);
            }
        }
        Eigen::SparseMatrix<double> jac(unknowns(), unknowns());
        jac.setFromTriplets(triplets.begin(), triplets.end());
        return jac;
    }

    Eigen::Matrix<double, 8, Eigen::Dynamic> full_solution(const Eigen::VectorXd& x) const {
        Eigen::Matrix<double, 8, Eigen::Dynamic> nodes(8, grid_.n_nodes());
        for (Eigen::Index j = 0; j < segments(); ++j) propagate(j, segment_start(x, j), &nodes);
        return nodes;
    }

private:
    CoupledSystem system_;
    StateVec<double> y0_;
    TimeGrid<double> grid_;
    std::vector<Eigen::Index> bounds_;
};

double safe_norm(const MultipleShooting& shooting, const Eigen::VectorXd& x, Eigen::VectorXd& r) {
    try {
        r = shooting.residual(x);
        return r.norm();
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

SweepSolution solve_bvp_oracle(const Params& params, const Weights& weights, const StateVec<double>& y0,
                               const TimeGrid<double>& grid, const BvpOptions& options) {
    validate(params);
    validate(weights);
    const auto span = grid.tf() - grid.t0();
    auto segments = static_cast<Eigen::Index>(std::llround(span / options.segment_length));
    segments = std::clamp<Eigen::Index>(segments, 1, grid.n_steps());
    MultipleShooting shooting(params, weights, y0, grid, segments);

    // Initial guess: the untreated states and their adjoint.
    const ControlSignal untreated = ControlSignal::zero(grid);
    const auto states0 = solve_states(params, y0, untreated);
    const auto costates0 = solve_costates(params, weights, states0, untreated);
    Eigen::VectorXd x(shooting.unknowns());
    x.head<4>() = costates0.front();
    for (Eigen::Index j = 1; j < segments; ++j) {
        const Eigen::Index k = shooting.boundary_node(j);
        x.segment<4>(4 + 8 * (j - 1)) = states0.at(k);
        x.segment<4>(8 + 8 * (j - 1)) = costates0.at(k);
    }

    Eigen::VectorXd r;
    double norm = safe_norm(shooting, x, r);
    if (!std::isfinite(norm)) throw Error(ErrorCode::NewtonDivergence, "initial guess is not integrable");
    int iteration = 0;
    while (r.cwiseAbs().maxCoeff() >= options.tolerance) {
        if (iteration == options.max_iterations)
            throw Error(ErrorCode::NewtonDivergence, "no convergence in " + std::to_string(iteration) + " iterations");
        ++iteration;
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(shooting.jacobian(x));
        if (lu.info() != Eigen::Success) throw Error(ErrorCode::NewtonDivergence, "singular shooting Jacobian");
        const Eigen::VectorXd dx = lu.solve(-r);
        if (lu.info() != Eigen::Success || !dx.allFinite())
            throw Error(ErrorCode::NewtonDivergence, "shooting linear solve failed");

        bool accepted = false;
        for (double lambda = 1.0; lambda >= 1.0 / 1024; lambda *= 0.5) {
            Eigen::VectorXd trial_r;
            const Eigen::VectorXd trial = x + lambda * dx;
            const double trial_norm = safe_norm(shooting, trial, trial_r);
            if (trial_norm < (1.0 - 1e-4 * lambda) * norm) {
                x = trial;
                r = std::move(trial_r);
                norm = trial_norm;
                accepted = true;
                break;
            }
        }
        if (!accepted) throw Error(ErrorCode::NewtonDivergence, "line search failed");
    }

    const auto nodes = shooting.full_solution(x);
    SweepSolution sol{StateTrajectory<double>{grid, nodes.topRows<4>()}, Trajectory<double, 4>{grid, nodes.bottomRows<4>()},
                      ControlSignal::zero(grid)};
    sol.control = project_control(sol.states, sol.costates, weights);
    sol.objective = objective(sol.states, sol.control, weights);
    sol.iterations = iteration;
    sol.converged = true;
    sol.final_change = r.cwiseAbs().maxCoeff();
    return sol;
}

}  // namespace seirs
