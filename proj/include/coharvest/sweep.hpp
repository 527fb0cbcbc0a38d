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

#ifndef COHARVEST_SWEEP_HPP
#define COHARVEST_SWEEP_HPP

#include <string>
#include <variant>
#include <vector>

#include "coharvest/harvest.hpp"
#include "coharvest/model.hpp"

namespace coharvest::sweep {

/// Inclusive linear grid over one parameter; "start:stop:count" or a single
/// value on the command line.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    static GridSpec single(double v) { return {v, v, 1}; }
    /// Parses "v" or "start:stop:count"; enforces count >= 1, start <= stop.
    static GridSpec parse(const std::string& text);
    std::vector<double> values() const;
};

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// True when any row carries a non-"ok" status.
    bool has_failures = false;
};

/// CSV with a header row, comma separators, '.' decimal point, 17
/// significant digits, LF line endings.
std::string to_csv(const Table& table);

/// JSON array of objects mirroring the CSV fields, one object per row.
std::string to_json(const Table& table);

struct SweepOptions {
    int dimension = 1;
    int phase_r = 1;
    double radius = 1.0;
    double coupling = 1e-3;
    bool reattach_coupling = false; // multiply C by lambda-bar, energies by
                                    // lambda-bar^2
    harvest::EvalPath path = harvest::EvalPath::ClosedForm;
    quad::QuadratureSpec quadrature;
    int jobs = 1;
};

/// (E, T) sweep of the static-detector outputs; rows in E-major order.
/// Columns: energy, duration, coherence, delta_e_coh, delta_e_vac,
/// commutator_term, status.
Table run_static(const GridSpec& energies, const GridSpec& durations,
                 const SweepOptions& opt);

/// (E, T, v) sweep comparing static and moving detectors; rows ordered
/// E-major, then duration, then velocity.
/// Columns: energy, duration, velocity, coherence_static, coherence_moving,
/// swelling_ratio, status.
Table run_moving(const GridSpec& energies, const GridSpec& durations,
                 const GridSpec& velocities, const SweepOptions& opt);

/// E sweep of the instantaneous-interaction protocol over a velocity list.
/// Columns: energy, velocity, coherence, delta_e, status.
Table run_catalysis(const GridSpec& energies, const std::vector<double>& velocities,
                    const SweepOptions& opt);

/// Repeated-harvest series for one (E, velocity) point.
/// Columns: energy, velocity, harvest_index, coherence.
Table run_catalysis_series(double energy, double velocity, int harvests,
                           const SweepOptions& opt);

/// Hard-coded figure grids (fig3a ... fig9f).  Throws std::invalid_argument
/// for unknown identifiers; list_figures() names the valid set.
Table run_figure(const std::string& figure_id, int nx, int ny,
                 const SweepOptions& opt);
std::vector<std::string> list_figures();

/// A gnuplot script that plots the named figure from the given data file.
std::string gnuplot_script(const std::string& figure_id,
                           const std::string& data_path);

} // namespace coharvest::sweep

#endif
