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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "seirs/model.hpp"

namespace seirs {

struct YearMonth {
    int year = 0;
    int month = 1;  // 1..12

    YearMonth next() const { return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1}; }
    YearMonth plus(int months) const;
    std::string to_string() const;  // YYYY-MM
    static YearMonth parse(std::string_view text);

    bool operator==(const YearMonth&) const = default;
};

/// Monthly reported case counts starting at `start`.
struct CaseSeries {
    YearMonth start;
    Eigen::VectorXd counts;

    Eigen::Index size() const { return counts.size(); }
};

/// CSV `month,cases` with strictly consecutive YYYY-MM months.
CaseSeries parse_case_series(std::string_view text);
CaseSeries load_case_series(const std::filesystem::path& path);
void save_case_series(const std::filesystem::path& path, const CaseSeries& series);

struct PredictOptions {
    double max_step = 1e-3;      // years
    double burn_in_years = 0.0;  // integrate this long before the first month
};

/// s * I(k / 12) for k = 0..n_months-1, starting from y0 at t = -burn_in.
Eigen::VectorXd predict_cases(const Params& params, ModelKind kind, Eigen::Index n_months, const StateVec<double>& y0,
                              const PredictOptions& options = {});

/// ||pred - empiric||_2 / ||empiric||_2
double relative_error(const Eigen::Ref<const Eigen::VectorXd>& predicted,
                      const Eigen::Ref<const Eigen::VectorXd>& empiric);
inline double relative_error(const Eigen::Ref<const Eigen::VectorXd>& predicted, const CaseSeries& empiric) {
    return relative_error(predicted, empiric.counts);
}

struct ParameterBound {
    std::string name;
    double lower = 0;
    double upper = 0;
};

/// Box used when the caller names a free parameter without bounds.
ParameterBound default_bound(std::string_view name, const Params& base);

struct FitSpec {
    ModelKind kind = ModelKind::Seirs;
    std::vector<ParameterBound> free;  // everything else is fixed at `base`
    Params base;                       // fixed values and the initial guess
    bool tie_c1_to_b1 = false;         // c1 follows b1 instead of being fixed/free
    int restarts = 8;
    int max_evaluations = 6000;        // per start
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
    PredictOptions predict;
};

/// Throws InvalidSpec on unknown/duplicate names, empty or inverted boxes, or
/// an initial guess outside its box.
void validate(const FitSpec& spec);

struct FitResult {
    Params params;                 // phi normalized to [0, 2 pi)
    double error = 0;
    int evaluations = 0;
    int iterations = 0;
    bool converged = false;
    int best_start = 0;
    std::vector<double> history;   // best objective per accepted simplex iteration
    double peak_time = 0;          // years from series start to the first empirical maximum
    double phi_peak_convention = 0;// phi + 2 pi peak_time, wrapped to [0, 2 pi)
};

/// Multi-start bounded simplex minimization of relative_error. Each candidate
/// starts from its own averaged-system endemic equilibrium.
FitResult fit(const CaseSeries& data, const FitSpec& spec);

/// Index in [0, n) of the largest count within the first year of data.
Eigen::Index first_peak_month(const CaseSeries& data);

}  // namespace seirs
