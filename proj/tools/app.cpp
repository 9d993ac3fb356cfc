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

#include "app.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "seirs/cost_effectiveness.hpp"
#include "seirs/equilibrium.hpp"
#include "seirs/fitting.hpp"
#include "seirs/integrator.hpp"
#include "seirs/optimal_control.hpp"
#include "seirs/params_io.hpp"
#include "seirs/sensitivity.hpp"
#include "seirs/trajectory_io.hpp"

namespace seirs::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kDefaultStep = 1e-3;

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

void require_file(const fs::path& path, const char* flag) {
    if (path.empty()) config_error(std::string(flag) + " is required");
    if (!fs::is_regular_file(path)) config_error(std::string(flag) + " file not found: " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw Error(ErrorCode::IoError, "cannot create output directory " + dir.string());
}

Params load_effective_params(const RunConfig& config) {
    require_file(config.params_path, "--params");
    Params params = load_params(config.params_path);
    if (config.phi) params.phi = *config.phi;
    validate(params);
    return params;
}

TimeGrid<double> make_grid(double t0, double tf, const std::optional<Eigen::Index>& steps) {
    if (!(tf > t0)) config_error("time horizon must be positive");
    if (steps) {
        if (*steps < 1) config_error("--steps must be >= 1");
        return TimeGrid<double>(t0, tf, *steps);
    }
    return TimeGrid<double>::with_max_step(t0, tf, kDefaultStep);
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::IoError, "sha256 failed for " + path.string());
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

void write_json(const fs::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) config_error("missing input " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

json to_json(const Params& p) {
    return {{"mu", p.mu}, {"nu", p.nu}, {"gamma", p.gamma}, {"epsilon", p.epsilon}, {"b0", p.b0},
            {"b1", p.b1}, {"c1", p.c1}, {"phi", p.phi},     {"s", p.s}};
}

Params params_from_json(const json& j) {
    Params p;
    p.mu = j.at("mu");
    p.nu = j.at("nu");
    p.gamma = j.at("gamma");
    p.epsilon = j.at("epsilon");
    p.b0 = j.at("b0");
    p.b1 = j.at("b1");
    p.c1 = j.at("c1");
    p.phi = j.at("phi");
    p.s = j.at("s");
    return p;
}

json to_json(const Weights& w) {
    return {{"kappa1", w.kappa1}, {"kappa2", w.kappa2}, {"cost", w.cost}, {"t_final", w.t_final},
            {"control_max", w.control_max}};
}

json to_json(const TimeGrid<double>& g) { return {{"t0", g.t0()}, {"tf", g.tf()}, {"n_steps", g.n_steps()}}; }

json to_json(const StateVec<double>& y) { return {{"S", y[kS]}, {"E", y[kE]}, {"I", y[kI]}, {"R", y[kR]}}; }

/// Manifest shared by every subcommand: effective settings plus output digests.
void write_manifest(const fs::path& dir, const std::string& command, json settings,
                    const std::vector<std::string>& outputs) {
    json digests = json::object();
    for (const auto& name : outputs) digests[name] = sha256_file(dir / name);
    json manifest{{"command", command}, {"settings", std::move(settings)}, {"outputs", std::move(digests)}};
    write_json(dir / (command + "_manifest.json"), manifest);
}

std::vector<ParameterBound> read_bounds(const fs::path& path, const std::vector<std::string>& names,
                                        const Params& base) {
    std::vector<ParameterBound> bounds;
    for (const auto& n : names) bounds.push_back(default_bound(n, base));
    if (path.empty()) return bounds;
    require_file(path, "--bounds");
    std::ifstream in(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::string key;
        char eq = 0;
        char comma = 0;
        double lo = 0;
        double hi = 0;
        std::istringstream ss(line);
        if (!(ss >> key >> eq >> lo >> comma >> hi) || eq != '=' || comma != ',')
            throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) + ": expected `name = lo, hi`");
        if (key == "beta") key = "b0";
        for (auto& b : bounds) {
            if (b.name == key) {
                b.lower = lo;
                b.upper = hi;
            }
        }
    }
    return bounds;
}

StateVec<double> burn_in(const Params& params, ModelKind kind, const StateVec<double>& y0, double years) {
    if (years <= 0) return y0;
    const auto grid = TimeGrid<double>::with_max_step(-years, 0.0, kDefaultStep);
    return rk4_forward([&](double t, const StateVec<double>& y) { return model_rhs(kind, params, t, y); }, grid, y0)
        .back();
}

struct ControlRun {
    SweepSolution solution;
    Weights weights;
    Params params;
    StateVec<double> y0;
};

Weights make_weights(const RunConfig& config, double kappa1, double kappa2) {
    Weights w;
    w.kappa1 = kappa1;
    w.kappa2 = kappa2;
    w.cost = config.cost;
    w.t_final = config.t_final.value_or(5.0);
    w.control_max = config.control_max;
    try {
        validate(w);
    } catch (const Error& e) {
        config_error(e.what());
    }
    return w;
}

int control_into(const RunConfig& config, const Params& params, const Weights& weights, const fs::path& dir) {
    ensure_dir(dir);
    const auto grid = make_grid(0.0, weights.t_final, config.steps);
    const auto y0 = endemic_equilibrium_seirs(params);
    SweepOptions options;
    options.relaxation = config.relaxation;
    options.tolerance = config.tolerance;
    options.max_iterations = config.max_iterations;
    const auto sol = forward_backward_sweep(params, weights, y0, grid, options);
    const auto untreated = ControlSignal::zero(grid);
    const double untreated_objective = objective(solve_states(params, y0, untreated), untreated, weights);

    write_trajectory_csv(dir / "states.csv", sol.states, kStateColumns);
    write_trajectory_csv(dir / "costates.csv", sol.costates, kCostateColumns);
    write_grid_csv(dir / "control.csv", kControlColumns, grid, sol.control.values.transpose());

    json summary{
        {"objective", sol.objective},
        {"untreated_objective", untreated_objective},
        {"iterations", sol.iterations},
        {"converged", sol.converged},
        {"final_change", sol.final_change},
        {"params", to_json(params)},
        {"weights", to_json(weights)},
        {"grid", to_json(grid)},
        {"initial_state", to_json(y0)},
        {"sweep", {{"relaxation", options.relaxation}, {"tolerance", options.tolerance},
                   {"max_iterations", options.max_iterations}}},
    };
    write_json(dir / "control_summary.json", summary);

    json settings{{"params_file", config.params_path.generic_string()}, {"params", to_json(params)},
                  {"weights", to_json(weights)},  {"grid", to_json(grid)},
                  {"relaxation", options.relaxation}, {"tolerance", options.tolerance},
                  {"max_iterations", options.max_iterations}};
    write_manifest(dir, "control", settings, {"states.csv", "costates.csv", "control.csv", "control_summary.json"});
    if (!sol.converged) {
        std::cerr << "seirsctl: sweep did not converge after " << sol.iterations << " iterations (change "
                  << sol.final_change << ")\n";
        return kNoConvergence;
    }
    return kSuccess;
}

int report_from(const fs::path& in, const fs::path& out) {
    ensure_dir(out);
    const json summary = read_json(in / "control_summary.json");
    if (!fs::is_regular_file(in / "states.csv")) config_error("missing input " + (in / "states.csv").string());
    if (!fs::is_regular_file(in / "control.csv")) config_error("missing input " + (in / "control.csv").string());
    const auto states_table = read_grid_csv(in / "states.csv");
    const auto control_table = read_grid_csv(in / "control.csv");
    if (states_table.columns != kStateColumns) throw Error(ErrorCode::ParseError, "states.csv must have t,S,E,I,R");
    if (control_table.columns != kControlColumns) throw Error(ErrorCode::ParseError, "control.csv must have t,T");
    if (!(states_table.grid == control_table.grid)) throw Error(ErrorCode::GridMismatch, "states/control grids differ");

    Params params;
    Weights weights;
    double i0 = 0;
    StateVec<double> y0;
    try {
        params = params_from_json(summary.at("params"));
        const auto& w = summary.at("weights");
        weights.kappa1 = w.at("kappa1");
        weights.kappa2 = w.at("kappa2");
        weights.cost = w.at("cost");
        weights.t_final = w.at("t_final");
        weights.control_max = w.at("control_max");
        const auto& y = summary.at("initial_state");
        y0 << y.at("S").get<double>(), y.at("E").get<double>(), y.at("I").get<double>(), y.at("R").get<double>();
        i0 = y0[kI];
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "control_summary.json: " + std::string(e.what()));
    }

    const StateTrajectory<double> states{states_table.grid, states_table.values};
    const ControlSignal control{control_table.grid, control_table.values.row(0).transpose()};
    const auto report = evaluate_effectiveness(states, control, i0, weights, params.s);

    // Same measures on the untreated trajectory, for reference.
    const auto untreated = solve_states(params, y0, ControlSignal::zero(states.grid));
    const Eigen::VectorXd untreated_i = untreated.values.row(kI).transpose();
    const auto untreated_efficacy = efficacy(untreated_i, i0);
    const double untreated_averted = cases_averted(states.grid, untreated_i, i0, weights.t_final, params.s);

    json doc{
        {"cases_averted", report.cases_averted},
        {"effectiveness", report.effectiveness},
        {"total_cost", report.total_cost},
        {"acer", report.acer},
        {"efficacy_min", report.efficacy.min},
        {"efficacy_max", report.efficacy.max},
        {"scale", report.scale},
        {"initial_infectious", report.initial_infectious},
        {"t_final", report.t_final},
        {"unit_cost", weights.cost},
        {"units", {{"cases_averted", "reported cases (fraction x s)"},
                   {"total_cost", "cost units (C x fraction x s x years)"},
                   {"acer", "cost per averted reported case"}}},
        {"untreated_reference", {{"cases_averted", untreated_averted},
                                 {"effectiveness", effectiveness(untreated_averted, i0, weights.t_final, params.s)},
                                 {"efficacy_min", untreated_efficacy.min},
                                 {"efficacy_max", untreated_efficacy.max}}},
    };
    write_json(out / "report.json", doc);
    write_grid_csv(out / "efficacy.csv", {"F"}, states.grid, report.efficacy.values.transpose());
    write_manifest(out, "report", json{{"input_summary", summary}}, {"report.json", "efficacy.csv"});
    return kSuccess;
}

std::string short_number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

int run_simulate(const RunConfig& config) {
    if (!config.t_final || !(*config.t_final > 0)) config_error("--tf must be > 0");
    const Params params = load_effective_params(config);
    ensure_dir(config.out_dir);
    const auto grid = make_grid(0.0, *config.t_final, config.steps);
    const auto y0 = burn_in(params, config.model, endemic_equilibrium(config.model, params), config.burn_in);
    const auto traj = rk4_forward(
        [&](double t, const StateVec<double>& y) { return model_rhs(config.model, params, t, y); }, grid, y0);
    write_trajectory_csv(config.out_dir / "trajectory.csv", traj, kStateColumns);

    const auto n_months = static_cast<Eigen::Index>(std::floor(12.0 * *config.t_final + 1e-9));
    std::vector<std::string> outputs{"trajectory.csv"};
    if (n_months >= 2) {
        std::vector<double> times;
        for (Eigen::Index k = 0; k < n_months; ++k) times.push_back(static_cast<double>(k) / 12.0);
        Eigen::VectorXd cases = params.s * sample(traj, std::span<const double>(times)).row(kI).transpose();
        if (config.noise > 0) {
            std::mt19937_64 rng(config.seed);
            std::normal_distribution<double> normal(0.0, config.noise);
            for (auto& c : cases) c = std::max(0.0, c * (1.0 + normal(rng)));
        }
        YearMonth start;
        try {
            start = YearMonth::parse(config.start_month);
        } catch (const Error& e) {
            config_error(e.what());
        }
        save_case_series(config.out_dir / "cases.csv", CaseSeries{start, cases});
        outputs.emplace_back("cases.csv");
    }

    json settings{{"params_file", config.params_path.generic_string()},
                  {"model", to_string(config.model)},
                  {"params", to_json(params)},
                  {"grid", to_json(grid)},
                  {"initial_state", to_json(y0)},
                  {"burn_in", config.burn_in},
                  {"noise", config.noise},
                  {"seed", config.seed},
                  {"start_month", config.start_month}};
    write_manifest(config.out_dir, "simulate", settings, outputs);
    return kSuccess;
}

int run_fit(const RunConfig& config) {
    require_file(config.data_path, "--data");
    const auto data = load_case_series(config.data_path);
    const Params base = load_effective_params(config);
    ensure_dir(config.out_dir);

    std::vector<std::string> names = config.free;
    if (names.empty()) {
        names = config.model == ModelKind::Seirs ? std::vector<std::string>{"b0", "b1", "c1", "phi", "s"}
                                                 : std::vector<std::string>{"b0", "b1", "phi", "s"};
        if (config.tie_c1 && config.model == ModelKind::Seirs) names.erase(names.begin() + 2);
    }

    FitSpec spec;
    spec.kind = config.model;
    spec.base = base;
    if (config.model == ModelKind::Sirs) spec.base.c1 = 0;
    spec.free = read_bounds(config.bounds_path, names, spec.base);
    spec.tie_c1_to_b1 = config.tie_c1;
    spec.restarts = config.restarts;
    spec.max_evaluations = config.max_evaluations;
    spec.seed = config.seed;
    spec.predict.burn_in_years = config.burn_in;
    try {
        validate(spec);
    } catch (const Error& e) {
        config_error(e.what());
    }

    const FitResult result = fit(data, spec);
    const auto y0 = endemic_equilibrium(config.model, result.params);
    const Eigen::VectorXd predicted = predict_cases(result.params, config.model, data.size(), y0, spec.predict);

    json bounds = json::array();
    for (const auto& b : spec.free) bounds.push_back({{"name", b.name}, {"lower", b.lower}, {"upper", b.upper}});
    json doc{
        {"model", to_string(config.model)},
        {"params", to_json(result.params)},
        {"relative_error", result.error},
        {"r0", basic_reproduction_number(config.model, result.params)},
        {"mean_predicted", predicted.mean()},
        {"mean_empiric", data.counts.mean()},
        {"evaluations", result.evaluations},
        {"iterations", result.iterations},
        {"converged", result.converged},
        {"best_start", result.best_start},
        {"objective_history", result.history},
        {"peak_time", result.peak_time},
        {"phi_peak_convention", result.phi_peak_convention},
        {"free", bounds},
    };
    write_json(config.out_dir / "fit_result.json", doc);
    save_params(config.out_dir / "fitted.params", result.params);
    {
        std::ofstream out(config.out_dir / "fit_cases.csv");
        if (!out) throw Error(ErrorCode::IoError, "cannot write fit_cases.csv");
        out << "month,empiric,predicted\n";
        for (Eigen::Index k = 0; k < data.size(); ++k) {
            out << data.start.plus(static_cast<int>(k)).to_string() << ',' << format_double(data.counts[k]) << ','
                << format_double(predicted[k]) << '\n';
        }
    }

    json settings{{"params_file", config.params_path.generic_string()},
                  {"data_file", config.data_path.generic_string()},
                  {"model", to_string(config.model)},
                  {"base_params", to_json(spec.base)},
                  {"free", bounds},
                  {"tie_c1_to_b1", spec.tie_c1_to_b1},
                  {"restarts", spec.restarts},
                  {"max_evaluations", spec.max_evaluations},
                  {"seed", spec.seed},
                  {"burn_in", spec.predict.burn_in_years}};
    write_manifest(config.out_dir, "fit", settings, {"fit_result.json", "fitted.params", "fit_cases.csv"});
    if (!result.converged) {
        std::cerr << "seirsctl: fit did not converge (best e = " << result.error << ")\n";
        return kNoConvergence;
    }
    return kSuccess;
}

int run_sensitivity(const RunConfig& config) {
    const Params params = load_effective_params(config);
    ensure_dir(config.out_dir);
    {
        std::ofstream out(config.out_dir / "sensitivity.csv");
        if (!out) throw Error(ErrorCode::IoError, "cannot write sensitivity.csv");
        out << "parameter,mode,index\n";
        for (const auto name : kSensitivityParameters) {
            const std::string p(name);
            out << p << ",standard," << format_double(sensitivity_analytic_standard(params, p).value) << '\n';
            out << p << ",variant," << format_double(sensitivity_analytic_variant(params, p).value) << '\n';
            out << p << ",numeric-standard,"
                << format_double(sensitivity_numeric(r0_seirs<double>, params, p, config.rel_step).value) << '\n';
            out << p << ",numeric-variant,"
                << format_double(sensitivity_numeric(r0_variant, params, p, config.rel_step).value) << '\n';
        }
    }

    const double tf = config.t_final.value_or(5.0);
    const auto grid = make_grid(0.0, tf, config.steps);
    const auto y0 = endemic_equilibrium_seirs(params);
    std::vector<std::string> outputs{"sensitivity.csv"};
    for (const std::string p : {"nu", "mu"}) {
        const auto pair = perturbation_pair(params, p, config.factor, grid, y0);
        Eigen::MatrixXd values(2, grid.n_nodes());
        values.row(0) = pair.baseline.values.row(kI);
        values.row(1) = pair.perturbed.values.row(kI);
        const std::string name = "perturbation_" + p + ".csv";
        write_grid_csv(config.out_dir / name, {"I_baseline", "I_perturbed"}, grid, values);
        outputs.push_back(name);
    }
    json settings{{"params_file", config.params_path.generic_string()}, {"params", to_json(params)},
                  {"rel_step", config.rel_step}, {"factor", config.factor}, {"grid", to_json(grid)}};
    write_manifest(config.out_dir, "sensitivity", settings, outputs);
    return kSuccess;
}

int run_control(const RunConfig& config) {
    if (config.kappa1.size() != 1 || config.kappa2.size() != 1)
        config_error("control takes one --kappa1 and one --kappa2; use `pipeline` for grids");
    const Params params = load_effective_params(config);
    return control_into(config, params, make_weights(config, config.kappa1[0], config.kappa2[0]), config.out_dir);
}

int run_report(const RunConfig& config) {
    return report_from(config.in_dir.empty() ? config.out_dir : config.in_dir, config.out_dir);
}

int run_pipeline(const RunConfig& config) {
    if (config.kappa1.empty() || config.kappa2.empty()) config_error("--kappa1/--kappa2 need at least one value");
    const Params params = load_effective_params(config);
    struct Job {
        Weights weights;
        fs::path dir;
    };
    std::vector<Job> jobs;
    const bool single = config.kappa1.size() == 1 && config.kappa2.size() == 1;
    for (double k1 : config.kappa1) {
        for (double k2 : config.kappa2) {
            const fs::path dir = single ? config.out_dir
                                        : config.out_dir / ("kappa1_" + short_number(k1) + "_kappa2_" + short_number(k2));
            jobs.push_back({make_weights(config, k1, k2), dir});
        }
    }
    std::vector<std::future<int>> runs;
    for (const auto& job : jobs) {
        runs.push_back(std::async(std::launch::async, [&config, &params, job] {
            const int code = control_into(config, params, job.weights, job.dir);
            report_from(job.dir, job.dir);
            return code;
        }));
    }
    int worst = kSuccess;
    for (auto& r : runs) worst = std::max(worst, r.get());
    return worst;
}

int main(const std::vector<std::string>& args) {
    RunConfig config;
    CLI::App cli{"Seasonal SIRS/SEIRS simulation, fitting, sensitivity and treatment optimal control", "seirsctl"};
    cli.require_subcommand(1);

    std::string model = "seirs";
    const auto model_check = CLI::IsMember({"sirs", "seirs"});
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--params", config.params_path, "Parameter file (key = value)");
        sub->add_option("--out", config.out_dir, "Output directory");
        sub->add_option("--phi", config.phi, "Override the phase angle (radians)");
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--tf", config.t_final, "Horizon in years");
        sub->add_option("--steps", config.steps, "Number of RK4 steps (default: step 1e-3 years)");
    };
    auto add_control = [&](CLI::App* sub) {
        sub->add_option("--kappa1", config.kappa1, "Weight on infectious (comma list in pipeline)")->delimiter(',');
        sub->add_option("--kappa2", config.kappa2, "Weight on treatment squared (comma list in pipeline)")->delimiter(',');
        sub->add_option("--cost", config.cost, "Per-person unit treatment cost C");
        sub->add_option("--tmax", config.control_max, "Upper bound on treatment");
        sub->add_option("--relaxation", config.relaxation, "Convex-combination weight of the new control");
        sub->add_option("--tol", config.tolerance, "Relative change stopping tolerance");
        sub->add_option("--max-iter", config.max_iterations, "Sweep iteration cap");
    };

    auto* simulate = cli.add_subcommand("simulate", "Integrate SIRS/SEIRS and emit trajectory and monthly cases");
    add_params(simulate);
    add_grid(simulate);
    simulate->add_option("--model", model, "sirs or seirs")->check(model_check);
    simulate->add_option("--burn-in", config.burn_in, "Years integrated before t = 0");
    simulate->add_option("--noise", config.noise, "Relative sd of multiplicative Gaussian noise on cases");
    simulate->add_option("--seed", config.seed, "Noise seed");
    simulate->add_option("--start", config.start_month, "Month label of the first sample (YYYY-MM)");

    auto* fit_cmd = cli.add_subcommand("fit", "Estimate parameters from monthly case counts");
    add_params(fit_cmd);
    fit_cmd->add_option("--data", config.data_path, "CSV month,cases");
    fit_cmd->add_option("--model", model, "sirs or seirs")->check(model_check);
    fit_cmd->add_option("--free", config.free, "Free parameters (comma list)")->delimiter(',');
    fit_cmd->add_option("--bounds", config.bounds_path, "Bounds file (name = lo, hi)");
    fit_cmd->add_option("--restarts", config.restarts, "Number of multi-starts");
    fit_cmd->add_option("--max-evals", config.max_evaluations, "Objective evaluations per start");
    fit_cmd->add_option("--seed", config.seed, "Offset into the low-discrepancy start sequence");
    fit_cmd->add_option("--burn-in", config.burn_in, "Years integrated before the first month");
    fit_cmd->add_flag("--tie-c1", config.tie_c1, "Set c1 = b1 instead of fitting/fixing c1");

    auto* sens = cli.add_subcommand("sensitivity", "R0 sensitivity indices and +10% perturbation trajectories");
    add_params(sens);
    add_grid(sens);
    sens->add_option("--rel-step", config.rel_step, "Relative step of the numeric index");
    sens->add_option("--factor", config.factor, "Perturbation factor for the trajectory pairs");

    auto* control = cli.add_subcommand("control", "Solve the treatment optimal-control problem");
    add_params(control);
    add_grid(control);
    add_control(control);

    auto* report = cli.add_subcommand("report", "Cost-effectiveness measures from control outputs");
    report->add_option("--in", config.in_dir, "Directory holding control outputs (default: --out)");
    report->add_option("--out", config.out_dir, "Output directory");

    auto* pipeline = cli.add_subcommand("pipeline", "control then report, once per (kappa1, kappa2) pair");
    add_params(pipeline);
    add_grid(pipeline);
    add_control(pipeline);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        cli.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kSuccess : kUsageError;
    }
    config.model = model == "sirs" ? ModelKind::Sirs : ModelKind::Seirs;

    try {
        if (*simulate) return config.command = "simulate", run_simulate(config);
        if (*fit_cmd) return config.command = "fit", run_fit(config);
        if (*sens) return config.command = "sensitivity", run_sensitivity(config);
        if (*control) return config.command = "control", run_control(config);
        if (*report) return config.command = "report", run_report(config);
        if (*pipeline) return config.command = "pipeline", run_pipeline(config);
    } catch (const Error& e) {
        std::cerr << "seirsctl: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::IoError: return kIoError;
            case ErrorCode::NonFiniteState:
            case ErrorCode::NewtonDivergence: return kNoConvergence;
            default: return kUsageError;
        }
    } catch (const std::exception& e) {
        std::cerr << "seirsctl: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int main(int argc, char** argv) { return main(std::vector<std::string>(argv, argv + argc)); }

}  // namespace seirs::app
