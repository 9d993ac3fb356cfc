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
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "seirs/equilibrium.hpp"
#include "seirs/optimal_control.hpp"

using namespace seirs;
using namespace seirs::testing;

namespace {

struct Scenario {
    Params params = control_scenario();
    Weights weights = control_weights();
    StateVec<double> y0 = endemic_equilibrium_seirs(control_scenario());
    TimeGrid<double> grid{0.0, 5.0, 5000};
};

const SweepSolution& paper_sweep() {
    static const SweepSolution solution = [] {
        const Scenario s;
        return forward_backward_sweep(s.params, s.weights, s.y0, s.grid);
    }();
    return solution;
}

double max_extremal_gap(const SweepSolution& sol, const Weights& w) {
    double gap = 0;
    for (Eigen::Index k = 0; k < sol.control.values.size(); ++k) {
        const double expected = extremal_control(sol.costates.values(2, k), sol.costates.values(3, k),
                                                 sol.states.values(kI, k), w.kappa2, w.control_max);
        gap = std::max(gap, std::abs(sol.control.values[k] - expected));
    }
    return gap;
}

}  // namespace

TEST_CASE("extremal_control") {
    CHECK(extremal_control(0.4, 0.4, 0.3, 0.001, 1.0) == 0.0);
    CHECK(extremal_control(0.002, 0.0, 0.5, 0.001, 1.0) == doctest::Approx(0.5));
    CHECK(extremal_control(0.004, 0.0, 0.5, 0.001, 1.0) == 1.0);
    CHECK(extremal_control(0.04, 0.0, 0.5, 0.001, 1.0) == 1.0);
    CHECK(extremal_control(0.0, 0.04, 0.5, 0.001, 1.0) == 0.0);
}

TEST_CASE("objective quadrature") {
    const TimeGrid<double> grid(0.0, 5.0, 500);
    StateTrajectory<double> states{grid, Eigen::Matrix<double, 4, Eigen::Dynamic>::Zero(4, grid.n_nodes())};
    states.values.row(kI).setConstant(0.03);
    Weights w = control_weights();
    CHECK(objective(states, ControlSignal::zero(grid), w) == doctest::Approx(0.15).epsilon(1e-14));
    w.kappa1 = 2;
    CHECK(objective(states, ControlSignal::zero(grid), w) == doctest::Approx(0.30).epsilon(1e-14));
    w.kappa1 = 0;
    ControlSignal full{grid, Eigen::VectorXd::Ones(grid.n_nodes())};
    CHECK(objective(states, full, w) == doctest::Approx(0.001 * 5).epsilon(1e-14));
    const ControlSignal wrong = ControlSignal::zero(TimeGrid<double>(0.0, 5.0, 400));
    try {
        objective(states, wrong, w);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GridMismatch);
    }
}

TEST_CASE("control signal interpolates linearly") {
    const TimeGrid<double> grid(0.0, 1.0, 4);
    const ControlSignal c{grid, Eigen::Vector<double, 5>(0.0, 0.5, 1.0, 0.5, 0.0)};
    CHECK(c.at(0.125) == doctest::Approx(0.25));
    CHECK(c.at(0.5) == doctest::Approx(1.0));
    CHECK(c.at(1.0) == doctest::Approx(0.0));
}

TEST_CASE("zero state weight means no treatment") {
    Scenario s;
    s.weights.kappa1 = 0;
    const SweepSolution sol = forward_backward_sweep(s.params, s.weights, s.y0, s.grid);
    CHECK(sol.converged);
    CHECK(sol.control.values.cwiseAbs().maxCoeff() == 0.0);
    CHECK(sol.objective == 0.0);
}

TEST_CASE("paper scenario sweep") {
    const Scenario s;
    const SweepSolution& sol = paper_sweep();
    CHECK(sol.converged);
    CHECK(sol.iterations < 100);
    CHECK(sol.final_change < 1e-4);
    CHECK(sol.control.values.minCoeff() >= 0.0);
    CHECK(sol.control.values.maxCoeff() <= 1.0);
    CHECK(sol.control.values.maxCoeff() > 0.1);
    CHECK(sol.costates.back() == CostateVec<double>::Zero());

    const StateTrajectory<double> untreated = solve_states(s.params, s.y0, ControlSignal::zero(s.grid));
    const double j0 = objective(untreated, ControlSignal::zero(s.grid), s.weights);
    CHECK(sol.objective < j0);
    CHECK(sol.objective == doctest::Approx(0.136281).epsilon(1e-4));
    CHECK(j0 == doctest::Approx(0.138534).epsilon(1e-4));
    CHECK(max_extremal_gap(sol, s.weights) < 10 * 1e-4);

    // Treatment lowers I wherever it is applied for a while.
    CHECK(sol.states.values.row(kI).mean() < untreated.values.row(kI).mean());
}

TEST_CASE("sweep is insensitive to the relaxation weight") {
    const Scenario s;
    const SweepSolution& base = paper_sweep();
    for (double relaxation : {0.3, 0.7}) {
        SweepOptions options;
        options.relaxation = relaxation;
        const SweepSolution other = forward_backward_sweep(s.params, s.weights, s.y0, s.grid, options);
        CHECK(other.converged);
        CHECK((other.control.values - base.control.values).cwiseAbs().maxCoeff() < 2e-4);
        CHECK(other.objective == doctest::Approx(base.objective).epsilon(2e-4));
    }
}

TEST_CASE("every iterate stays admissible") {
    Scenario s;
    s.weights.kappa1 = 10;
    for (int iterations = 1; iterations <= 5; ++iterations) {
        SweepOptions options;
        options.max_iterations = iterations;
        const SweepSolution sol = forward_backward_sweep(s.params, s.weights, s.y0, s.grid, options);
        CHECK(sol.iterations == iterations);
        CHECK_FALSE(sol.converged);
        CHECK(sol.control.values.minCoeff() >= 0.0);
        CHECK(sol.control.values.maxCoeff() <= s.weights.control_max);
    }
}

TEST_CASE("sweep rejects a grid that does not span the horizon") {
    const Scenario s;
    try {
        forward_backward_sweep(s.params, s.weights, s.y0, TimeGrid<double>(0.0, 4.0, 4000));
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GridMismatch);
    }
}

TEST_CASE("adjoint gradient matches finite differences") {
    const Scenario s;
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ControlSignal control = ControlSignal::zero(s.grid);
    const double a = unit(rng);
    const double b = unit(rng);
    for (Eigen::Index k = 0; k < control.values.size(); ++k) {
        const double t = s.grid.node(k);
        control.values[k] = 0.5 + 0.25 * std::sin(2 * kPi * t + a) + 0.15 * std::cos(4.3 * t + b);
    }
    std::uniform_int_distribution<Eigen::Index> node(1, s.grid.n_steps() - 1);
    for (int n = 0; n < 20; ++n) {
        const GradientCheck g = adjoint_gradient_check(s.params, s.weights, s.y0, control, node(rng), 1e-5);
        CHECK(g.adjoint == doctest::Approx(g.finite_difference).epsilon(1e-3));
    }
}

TEST_CASE("gradient vanishes at interior optimal nodes") {
    const Scenario s;
    const SweepSolution& sol = paper_sweep();
    int checked = 0;
    for (Eigen::Index k = 100; k < s.grid.n_steps() && checked < 5; k += 37) {
        const double t = sol.control.values[k];
        if (t < 0.05 || t > 0.95) continue;
        ++checked;
        const GradientCheck g = adjoint_gradient_check(s.params, s.weights, s.y0, sol.control, k, 1e-5);
        // Relative to the size of one node's running cost.
        const double scale = s.grid.step() * s.weights.kappa2;
        CHECK(std::abs(g.adjoint) < 1e-2 * scale);
        CHECK(std::abs(g.finite_difference) < 1e-2 * scale);
        CHECK(2 * s.weights.kappa2 * t ==
              doctest::Approx((sol.costates.values(2, k) - sol.costates.values(3, k)) * sol.states.values(kI, k))
                  .epsilon(1e-3));
    }
    CHECK(checked == 5);
}

TEST_CASE("gradient check refuses perturbations outside the bounds") {
    const Scenario s;
    try {
        adjoint_gradient_check(s.params, s.weights, s.y0, ControlSignal::zero(s.grid), 10, 1e-5);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
}

TEST_CASE("projection of a converged solution reproduces its control") {
    const Scenario s;
    const SweepSolution& sol = paper_sweep();
    const ControlSignal projected = project_control(sol.states, sol.costates, s.weights);
    CHECK((projected.values - sol.control.values).cwiseAbs().maxCoeff() < 1e-3);
    const auto states = solve_states(s.params, s.y0, sol.control);
    CHECK(states.values == sol.states.values);
    const auto costates = solve_costates(s.params, s.weights, states, sol.control);
    CHECK(costates.values == sol.costates.values);
}

TEST_CASE("shooting oracle") {
    Scenario s;
    SUBCASE("agrees with the sweep on the paper scenario") {
        const SweepSolution oracle = solve_bvp_oracle(s.params, s.weights, s.y0, s.grid);
        CHECK(oracle.converged);
        CHECK(oracle.final_change < 1e-8);
        CHECK(oracle.costates.back().cwiseAbs().maxCoeff() < 1e-8);
        CHECK(oracle.objective == doctest::Approx(paper_sweep().objective).epsilon(0.005));
        CHECK((oracle.control.values - paper_sweep().control.values).cwiseAbs().maxCoeff() < 1e-3);
    }
    SUBCASE("returns no treatment when infection is free") {
        s.weights.kappa1 = 0;
        const SweepSolution oracle = solve_bvp_oracle(s.params, s.weights, s.y0, s.grid);
        CHECK(oracle.converged);
        CHECK(oracle.control.values.cwiseAbs().maxCoeff() == 0.0);
        CHECK(oracle.objective == 0.0);
    }
}
