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

#include "seirs/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace seirs {

namespace {

double sanitize(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                             const NelderMeadOptions& options) {
    const Eigen::Index n = x0.size();
    // Gao & Han adaptive coefficients, with the n = 2 (standard) values for n = 1.
    const double dim = static_cast<double>(std::max<Eigen::Index>(n, 2));
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / dim;
    const double gamma = 0.75 - 1.0 / (2.0 * dim);
    const double delta = 1.0 - 1.0 / dim;

    NelderMeadResult result;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++result.evaluations;
        return sanitize(f(x));
    };

    Eigen::MatrixXd simplex(n, n + 1);
    Eigen::VectorXd values(n + 1);
    simplex.col(0) = x0;
    values[0] = eval(x0);
    for (Eigen::Index i = 0; i < n; ++i) {
        simplex.col(i + 1) = x0;
        simplex(i, i + 1) += step[i];
        values[i + 1] = eval(simplex.col(i + 1));
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n + 1));
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
        Eigen::MatrixXd s(n, n + 1);
        Eigen::VectorXd v(n + 1);
        for (Eigen::Index i = 0; i <= n; ++i) {
            s.col(i) = simplex.col(order[static_cast<std::size_t>(i)]);
            v[i] = values[order[static_cast<std::size_t>(i)]];
        }
        simplex = std::move(s);
        values = std::move(v);
    };

    sort_simplex();
    while (result.evaluations < options.max_evaluations) {
        const double spread = values[n] - values[0];
        const double extent = (simplex.colwise() - simplex.col(0)).cwiseAbs().maxCoeff();
        if (spread <= options.f_tolerance && extent <= options.x_tolerance) {
            result.converged = true;
            break;
        }

        const Eigen::VectorXd centroid = simplex.leftCols(n).rowwise().mean();
        const Eigen::VectorXd worst = simplex.col(n);
        const Eigen::VectorXd reflected = centroid + alpha * (centroid - worst);
        const double f_reflected = eval(reflected);

        bool shrink = false;
        if (f_reflected < values[0]) {
            const Eigen::VectorXd expanded = centroid + beta * (reflected - centroid);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                simplex.col(n) = expanded;
                values[n] = f_expanded;
            } else {
                simplex.col(n) = reflected;
                values[n] = f_reflected;
            }
        } else if (f_reflected < values[n - 1]) {
            simplex.col(n) = reflected;
            values[n] = f_reflected;
        } else if (f_reflected < values[n]) {
            const Eigen::VectorXd outside = centroid + gamma * (reflected - centroid);
            const double f_outside = eval(outside);
            if (f_outside <= f_reflected) {
                simplex.col(n) = outside;
                values[n] = f_outside;
            } else {
                shrink = true;
            }
        } else {
            const Eigen::VectorXd inside = centroid - gamma * (reflected - centroid);
            const double f_inside = eval(inside);
            if (f_inside < values[n]) {
                simplex.col(n) = inside;
                values[n] = f_inside;
            } else {
                shrink = true;
            }
        }

        if (shrink) {
            for (Eigen::Index i = 1; i <= n; ++i) {
                simplex.col(i) = simplex.col(0) + delta * (simplex.col(i) - simplex.col(0));
                values[i] = eval(simplex.col(i));
            }
        }
        sort_simplex();
        ++result.iterations;
        result.history.push_back(values[0]);
    }

    result.x = simplex.col(0);
    result.f = values[0];
    return result;
}

}  // namespace seirs
