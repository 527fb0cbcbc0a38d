// Copyright 2026 the coharvest developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coharvest/catalysis.hpp"
#include "coharvest/model.hpp"
#include "coharvest/sweep.hpp"
#include "coharvest/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
    std::string config_path;
    int dimension = 1;
    int phase = 1;
    std::string energy = "1";
    std::string duration = "1";
    double radius = 1.0;
    std::string velocity = "0";
    double coupling = 1e-3;
    std::string format = "csv";
    std::string output;
    int jobs = 1;
    double tol_abs = 1e-12;
    double tol_rel = 1e-10;
    std::string path = "closed";
    bool with_coupling = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_grids = true) {
    cmd->add_option("--config", a.config_path, "key=value configuration file");
    cmd->add_option("--dimension", a.dimension, "spatial dimension")
        ->check(CLI::IsMember({1, 3}));
    cmd->add_option("--phase", a.phase, "amplitude phase selector r")
        ->check(CLI::IsMember({0, 1}));
    if (with_grids) {
        cmd->add_option("--energy", a.energy,
                        "field energy E (value or start:stop:count)");
        cmd->add_option("--duration", a.duration,
                        "interaction duration T (value or start:stop:count); 0 = "
                        "instantaneous");
    }
    cmd->add_option("--radius", a.radius, "detector mean radius R");
    cmd->add_option("--velocity", a.velocity,
                    "detector velocity in [0, 0.999] (moving: value or "
                    "start:stop:count)");
    cmd->add_option("--coupling", a.coupling, "dimensionless coupling lambda-bar");
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", a.output, "output path (default: stdout)");
    cmd->add_option("--jobs", a.jobs, "parallel row workers")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance-abs", a.tol_abs, "quadrature absolute tolerance");
    cmd->add_option("--tolerance-rel", a.tol_rel, "quadrature relative tolerance");
    cmd->add_option("--path", a.path, "evaluation path")
        ->check(CLI::IsMember({"closed", "quadrature"}));
    cmd->add_flag("--with-coupling", a.with_coupling,
                  "reattach lambda-bar factors to the outputs");
}

// Flag defaults are overridden by the config file only where the user did
// not pass the flag explicitly.
void apply_config(const CLI::App* cmd, CommonArgs& a) {
    if (a.config_path.empty()) return;
    const auto cfg = coharvest::model::parse_config_file(a.config_path);
    if (cmd->count("--dimension") == 0) a.dimension = cfg.dimension;
    if (cmd->count("--phase") == 0) a.phase = cfg.field.phase_r;
    if (cmd->count("--energy") == 0)
        a.energy = std::to_string(cfg.field.mean_energy);
    if (cmd->count("--duration") == 0)
        a.duration = std::to_string(cfg.switching.duration());
    if (cmd->count("--radius") == 0) a.radius = cfg.detector.mean_radius;
    if (cmd->count("--velocity") == 0)
        a.velocity = std::to_string(cfg.detector.velocity);
    if (cmd->count("--coupling") == 0) a.coupling = cfg.detector.coupling;
}

coharvest::sweep::SweepOptions make_options(const CommonArgs& a) {
    coharvest::sweep::SweepOptions opt;
    opt.dimension = a.dimension;
    opt.phase_r = a.phase;
    opt.radius = a.radius;
    opt.coupling = a.coupling;
    opt.reattach_coupling = a.with_coupling;
    opt.path = a.path == "quadrature" ? coharvest::harvest::EvalPath::Quadrature
                                      : coharvest::harvest::EvalPath::ClosedForm;
    opt.quadrature.abs_tol = a.tol_abs;
    opt.quadrature.rel_tol = a.tol_rel;
    opt.jobs = a.jobs;
    if (opt.coupling > 0.1)
        std::cerr << "warning: coupling " << opt.coupling
                  << " exceeds 0.1; perturbative results are unreliable\n";
    return opt;
}

int emit(const coharvest::sweep::Table& table, const CommonArgs& a) {
    const std::string text = a.format == "json" ? coharvest::sweep::to_json(table)
                                                : coharvest::sweep::to_csv(table);
    if (a.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file '" << a.output << "'\n";
            return kExitComputation;
        }
        out << text;
    }
    return table.has_failures ? kExitComputation : kExitOk;
}

// Parses and dispatches; exceptions propagate to main for the exit code.
int run(int argc, char** argv) {
    CLI::App app{
        "coherence harvesting from coherent scalar fields: closed forms, "
        "quadrature oracles, and an exact truncated-Fock channel"};
    app.require_subcommand(1);

    CommonArgs stat_args, mov_args, cat_args, fig_args;

    auto* cmd_static = app.add_subcommand(
        "static", "sweep the static-detector coherence and energy costs");
    add_common(cmd_static, stat_args);

    auto* cmd_moving = app.add_subcommand(
        "moving", "compare static and moving detectors over a sweep");
    add_common(cmd_moving, mov_args);

    auto* cmd_cat = app.add_subcommand(
        "catalysis", "instantaneous-interaction coherence and per-harvest cost");
    add_common(cmd_cat, cat_args);
    std::string cat_velocities = "0,0.6,0.8";
    int cat_series = 0;
    cmd_cat->add_option("--velocities", cat_velocities,
                        "comma-separated velocity list");
    cmd_cat->add_option("--series", cat_series,
                        "emit a repeated-harvest series of this length instead");

    auto* cmd_fig = app.add_subcommand(
        "figure", "reproduce a named figure's data grid");
    add_common(cmd_fig, fig_args, false);
    std::string fig_id;
    int fig_nx = 101, fig_ny = 101;
    std::string fig_gnuplot;
    cmd_fig->add_option("--id", fig_id, "figure identifier (fig3a ... fig9f)")
        ->required();
    cmd_fig->add_option("--nx", fig_nx, "grid points along the first axis");
    cmd_fig->add_option("--ny", fig_ny, "grid points along the second axis");
    cmd_fig->add_option("--gnuplot", fig_gnuplot,
                        "also write a gnuplot script to this path");

    auto* cmd_verify = app.add_subcommand(
        "verify", "run every oracle cross-check and report pass/fail");
    std::string only_module;
    double tolerance_scale = 1.0;
    cmd_verify->add_option("--only", only_module,
                           "restrict checks to one module");
    cmd_verify->add_option("--tolerance-scale", tolerance_scale,
                           "scale every check tolerance by this factor");

    auto* cmd_time = app.add_subcommand(
        "estimate-time", "time to harvest a unit of coherence by repetition");
    double et_coupling = 1e-3, et_omega_hz = 1e15;
    double et_energy = 1.0, et_velocity = 0.0;
    int et_dimension = 1;
    cmd_time->add_option("--coupling", et_coupling, "dimensionless coupling")
        ->required();
    cmd_time->add_option("--omega-hz", et_omega_hz,
                         "physical transition frequency in rad/s")
        ->required();
    cmd_time->add_option("--energy", et_energy, "field energy for the protocol");
    cmd_time->add_option("--velocity", et_velocity, "detector velocity");
    cmd_time->add_option("--dimension", et_dimension, "spatial dimension")
        ->check(CLI::IsMember({1, 3}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_static) {
            apply_config(cmd_static, stat_args);
            return emit(coharvest::sweep::run_static(
                            coharvest::sweep::GridSpec::parse(stat_args.energy),
                            coharvest::sweep::GridSpec::parse(stat_args.duration),
                            make_options(stat_args)),
                        stat_args);
        }
        if (*cmd_moving) {
            apply_config(cmd_moving, mov_args);
            return emit(coharvest::sweep::run_moving(
                            coharvest::sweep::GridSpec::parse(mov_args.energy),
                            coharvest::sweep::GridSpec::parse(mov_args.duration),
                            coharvest::sweep::GridSpec::parse(mov_args.velocity),
                            make_options(mov_args)),
                        mov_args);
        }
        if (*cmd_cat) {
            apply_config(cmd_cat, cat_args);
            if (cat_series > 0) {
                const auto energy =
                    coharvest::sweep::GridSpec::parse(cat_args.energy);
                return emit(coharvest::sweep::run_catalysis_series(
                                energy.start,
                                coharvest::sweep::GridSpec::parse(cat_args.velocity)
                                    .start,
                                cat_series,
                                make_options(cat_args)),
                            cat_args);
            }
            std::vector<double> velocities;
            std::stringstream ss(cat_velocities);
            std::string item;
            while (std::getline(ss, item, ','))
                velocities.push_back(std::stod(item));
            return emit(coharvest::sweep::run_catalysis(
                            coharvest::sweep::GridSpec::parse(cat_args.energy),
                            velocities, make_options(cat_args)),
                        cat_args);
        }
        if (*cmd_fig) {
            const auto table = coharvest::sweep::run_figure(
                fig_id, fig_nx, fig_ny, make_options(fig_args));
            if (!fig_gnuplot.empty()) {
                std::ofstream gp(fig_gnuplot, std::ios::binary);
                if (!gp) {
                    std::cerr << "error: cannot open '" << fig_gnuplot << "'\n";
                    return kExitComputation;
                }
                gp << coharvest::sweep::gnuplot_script(
                    fig_id, fig_args.output.empty() ? "figure.csv" : fig_args.output);
            }
            return emit(table, fig_args);
        }
        if (*cmd_verify) {
            if (!only_module.empty()) {
                const auto mods = coharvest::verify::known_modules();
                if (std::find(mods.begin(), mods.end(), only_module) == mods.end()) {
                    std::cerr << "error: unknown module '" << only_module
                              << "' for --only; known:";
                    for (const auto& m : mods) std::cerr << ' ' << m;
                    std::cerr << "\n";
                    return kExitUsage;
                }
            }
            coharvest::verify::VerifyOptions vo;
            vo.only_module = only_module;
            vo.tolerance_scale = tolerance_scale;
            const auto results = coharvest::verify::run_checks(vo);
            const bool ok = coharvest::verify::print_report(results, std::cout);
            return ok ? kExitOk : kExitComputation;
        }
        if (*cmd_time) {
            const coharvest::model::Dimension dim(et_dimension);
            const auto rep = coharvest::catalysis::make_report(
                dim, et_energy, et_velocity, et_coupling, et_omega_hz);
            coharvest::sweep::Table table;
            table.columns = {"coupling",
                             "omega_hz",
                             "time_per_unit_coherence_s",
                             "per_harvest_coherence",
                             "per_extraction_cost",
                             "harvests_for_unit_coherence",
                             "estimated_total_time_s"};
            table.rows.push_back(
                {coharvest::sweep::Cell{et_coupling},
                 coharvest::sweep::Cell{et_omega_hz},
                 coharvest::sweep::Cell{coharvest::catalysis::harvest_time_estimate(
                     et_coupling, et_omega_hz)},
                 coharvest::sweep::Cell{rep.per_harvest_coherence},
                 coharvest::sweep::Cell{rep.per_extraction_cost},
                 coharvest::sweep::Cell{rep.harvests_for_unit_coherence},
                 coharvest::sweep::Cell{rep.estimated_total_time_seconds}});
            CommonArgs a;
            return emit(table, a);
        }
    } catch (const coharvest::model::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return kExitComputation;
    }
}
