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
#include <optional>
#include <string>
#include <vector>

#include "seirs/model.hpp"

namespace seirs::app {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNoConvergence = 2,
    kIoError = 3,
};

/// Effective settings of one CLI invocation.
struct RunConfig {
    std::string command;
    std::filesystem::path params_path;
    std::filesystem::path data_path;
    std::filesystem::path out_dir = ".";
    std::filesystem::path in_dir;
    std::filesystem::path bounds_path;
    ModelKind model = ModelKind::Seirs;

    std::optional<double> t_final;
    std::optional<Eigen::Index> steps;
    std::optional<double> phi;
    std::vector<double> kappa1{1.0};
    std::vector<double> kappa2{0.001};
    double cost = 1.0;
    double control_max = 1.0;
    double relaxation = 0.5;
    double tolerance = 1e-4;
    int max_iterations = 500;

    std::vector<std::string> free;
    int restarts = 8;
    int max_evaluations = 6000;
    bool tie_c1 = false;
    double burn_in = 0.0;

    double noise = 0.0;
    std::uint64_t seed = 0;
    std::string start_month = "2011-09";

    double rel_step = 1e-5;
    double factor = 1.10;
};

int run_simulate(const RunConfig& config);
int run_fit(const RunConfig& config);
int run_sensitivity(const RunConfig& config);
int run_control(const RunConfig& config);
int run_report(const RunConfig& config);
/// control followed by report, once per (kappa1, kappa2) pair.
int run_pipeline(const RunConfig& config);

/// Parses argv, dispatches, and maps every failure onto an ExitCode with a
/// one-line diagnostic on stderr.
int main(int argc, char** argv);
int main(const std::vector<std::string>& args);

}  // namespace seirs::app
