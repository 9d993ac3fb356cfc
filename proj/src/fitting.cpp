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

#include "seirs/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <set>

#include "seirs/equilibrium.hpp"
#include "seirs/integrator.hpp"
#include "seirs/nelder_mead.hpp"
#include "seirs/sensitivity.hpp"

namespace seirs {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kPenalty = 1e3;

double wrap(double x, double lower, double width) {
    double r = std::fmod(x - lower, width);
    if (r < 0) r += width;
    return lower + r;
}

/// Maps an unconstrained coordinate onto one bounded parameter.
struct BoxCoordinate {
    std::string name;
    double lower;
    double upper;
    bool periodic;

    double to_external(double z) const {
        if (periodic) return wrap(z, lower, upper - lower);
        return lower + (upper - lower) * 0.5 * (1.0 + std::sin(z));
    }
    double to_internal(double x) const {
        if (periodic) return x;
        const double u = std::clamp(2.0 * (x - lower) / (upper - lower) - 1.0, -1.0, 1.0);
        return std::asin(u);
    }
    double initial_step() const { return periodic ? 0.5 : 0.25; }
};

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0;
    double f = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= static_cast<double>(base);
    }
    return result;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

struct StartOutcome {
    NelderMeadResult result;
    int evaluations = 0;
    int iterations = 0;
    std::vector<double> history;
};

}  // namespace

Eigen::VectorXd predict_cases(const Params& params, ModelKind kind, Eigen::Index n_months, const StateVec<double>& y0,
                              const PredictOptions& options) {
    if (n_months < 1) throw Error(ErrorCode::InvalidParams, "need at least one month");
    const double t_end = static_cast<double>(n_months) / 12.0;
    const auto grid = TimeGrid<double>::with_max_step(-options.burn_in_years, t_end, options.max_step);
    const auto traj =
        rk4_forward([&](double t, const StateVec<double>& y) { return model_rhs(kind, params, t, y); }, grid, y0);
    std::vector<double> times(static_cast<std::size_t>(n_months));
    for (Eigen::Index k = 0; k < n_months; ++k) times[static_cast<std::size_t>(k)] = static_cast<double>(k) / 12.0;
    return params.s * sample(traj, std::span<const double>(times)).row(kI).transpose();
}

double relative_error(const Eigen::Ref<const Eigen::VectorXd>& predicted,
                      const Eigen::Ref<const Eigen::VectorXd>& empiric) {
    if (predicted.size() != empiric.size())
        throw Error(ErrorCode::LengthMismatch, "prediction and data lengths differ");
    const double norm = empiric.norm();
    if (!(norm > 0)) throw Error(ErrorCode::ZeroNorm, "empirical series has zero norm");
    return (predicted - empiric).norm() / norm;
}

ParameterBound default_bound(std::string_view name, const Params& base) {
    const std::string key(name == "beta" ? "b0" : name);
    if (key == "b0") return {key, 10.0, 300.0};
    if (key == "b1" || key == "c1") return {key, 0.0, 0.9};
    if (key == "phi") return {key, 0.0, kTwoPi};
    if (key == "s") return {key, 1e3, 1e6};
    const double v = parameter_value(base, key);
    return {key, v / 10.0, v * 10.0};
}

void validate(const FitSpec& spec) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); };
    if (spec.free.empty()) fail("no free parameters");
    if (spec.restarts < 1) fail("restarts must be >= 1");
    if (spec.max_evaluations < 1) fail("max_evaluations must be >= 1");
    std::set<std::string> names;
    for (const auto& b : spec.free) {
        try {
            (void)parameter_value(spec.base, b.name);
        } catch (const Error&) {
            fail("unknown free parameter '" + b.name + "'");
        }
        const std::string key = b.name == "beta" ? "b0" : b.name;
        if (!names.insert(key).second) fail("duplicate free parameter '" + b.name + "'");
        if (!(b.lower < b.upper)) fail("empty bounds for '" + b.name + "'");
        const double guess = parameter_value(spec.base, key);
        if (!(guess >= b.lower && guess <= b.upper)) fail("initial guess for '" + b.name + "' outside bounds");
    }
    if (spec.tie_c1_to_b1 && names.contains("c1")) fail("c1 cannot be both free and tied to b1");
    if (spec.kind == ModelKind::Sirs && (names.contains("c1") || names.contains("epsilon")))
        fail("SIRS has no c1 or epsilon to fit");
}

Eigen::Index first_peak_month(const CaseSeries& data) {
    const Eigen::Index window = std::min<Eigen::Index>(12, data.size());
    Eigen::Index best = 0;
    data.counts.head(window).maxCoeff(&best);
    return best;
}

FitResult fit(const CaseSeries& data, const FitSpec& spec) {
    validate(spec);
    std::vector<BoxCoordinate> coords;
    for (const auto& b : spec.free) {
        const std::string key = b.name == "beta" ? "b0" : b.name;
        const bool periodic = key == "phi" && (b.upper - b.lower) >= kTwoPi - 1e-9;
        coords.push_back({key, b.lower, b.upper, periodic});
    }
    const auto dim = static_cast<Eigen::Index>(coords.size());

    auto to_params = [&](const Eigen::VectorXd& z) {
        Params p = spec.base;
        for (Eigen::Index i = 0; i < dim; ++i)
            parameter_ref(p, coords[static_cast<std::size_t>(i)].name) = coords[static_cast<std::size_t>(i)].to_external(z[i]);
        if (spec.tie_c1_to_b1) p.c1 = p.b1;
        if (spec.kind == ModelKind::Sirs) p.c1 = 0;
        return p;
    };

    auto objective = [&](const Eigen::VectorXd& z) {
        const Params p = to_params(z);
        try {
            const auto y0 = endemic_equilibrium(spec.kind, p);
            return relative_error(predict_cases(p, spec.kind, data.size(), y0, spec.predict), data.counts);
        } catch (const Error&) {
            return kPenalty;
        }
    };

    std::vector<Eigen::VectorXd> starts;
    {
        Eigen::VectorXd z0(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto& c = coords[static_cast<std::size_t>(i)];
            z0[i] = c.to_internal(parameter_value(spec.base, c.name));
        }
        starts.push_back(z0);
    }
    for (int r = 1; r < spec.restarts; ++r) {
        Eigen::VectorXd z(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto& c = coords[static_cast<std::size_t>(i)];
            const double u = radical_inverse(spec.seed + static_cast<std::uint64_t>(r), kPrimes[i % std::size(kPrimes)]);
            z[i] = c.to_internal(c.lower + u * (c.upper - c.lower));
        }
        starts.push_back(z);
    }

    NelderMeadOptions options;
    options.max_evaluations = spec.max_evaluations;
    options.f_tolerance = spec.tolerance;
    options.x_tolerance = 1e-9;

    auto run_start = [&](const Eigen::VectorXd& z0) {
        StartOutcome out;
        Eigen::VectorXd step(dim);
        for (Eigen::Index i = 0; i < dim; ++i) step[i] = coords[static_cast<std::size_t>(i)].initial_step();
        Eigen::VectorXd x = z0;
        double best = std::numeric_limits<double>::infinity();
        // Restart the simplex at the incumbent until a full run stops improving.
        for (int pass = 0; pass < 6 && out.evaluations < spec.max_evaluations; ++pass) {
            NelderMeadOptions pass_options = options;
            pass_options.max_evaluations = spec.max_evaluations - out.evaluations;
            auto r = nelder_mead(objective, x, step, pass_options);
            out.evaluations += r.evaluations;
            out.iterations += r.iterations;
            for (double h : r.history) out.history.push_back(std::min(h, best));
            const bool improved = r.f < best - spec.tolerance;
            if (r.f < best) {
                best = r.f;
                x = r.x;
            }
            out.result = r;
            out.result.x = x;
            out.result.f = best;
            if (!improved && r.converged) break;
            step *= 0.5;
        }
        return out;
    };

    std::vector<std::future<StartOutcome>> futures;
    for (const auto& z0 : starts) futures.push_back(std::async(std::launch::async, run_start, z0));
    std::vector<StartOutcome> outcomes;
    for (auto& f : futures) outcomes.push_back(f.get());

    std::size_t best_index = 0;
    int total_evaluations = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        total_evaluations += outcomes[i].evaluations;
        if (outcomes[i].result.f < outcomes[best_index].result.f) best_index = i;
    }
    const auto& best = outcomes[best_index];

    FitResult result;
    result.params = to_params(best.result.x);
    result.params.phi = wrap(result.params.phi, 0.0, kTwoPi);
    result.error = best.result.f;
    result.evaluations = total_evaluations;
    result.iterations = best.iterations;
    result.converged = best.result.converged;
    result.best_start = static_cast<int>(best_index);
    result.history = best.history;
    result.peak_time = static_cast<double>(first_peak_month(data)) / 12.0;
    result.phi_peak_convention = wrap(result.params.phi + kTwoPi * result.peak_time, 0.0, kTwoPi);
    return result;
}

}  // namespace seirs
