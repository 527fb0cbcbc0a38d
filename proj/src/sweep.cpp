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

#include "coharvest/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "coharvest/catalysis.hpp"
#include "coharvest/motion.hpp"

namespace coharvest::sweep {

namespace {

using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Rows are computed in parallel but stored by index, so the output order
// (and bytes) never depends on scheduling.
void parallel_rows(int jobs, std::size_t count,
                   const std::function<void(std::size_t)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::string sanitize_status(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

} // namespace

GridSpec GridSpec::parse(const std::string& text) {
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            return single(v);
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("expected start:stop:count");
        GridSpec g;
        std::size_t pos = 0;
        g.start = std::stod(text.substr(0, c1), &pos);
        g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &pos);
        const std::string cnt = text.substr(c2 + 1);
        g.count = std::stoi(cnt, &pos);
        if (pos != cnt.size()) throw std::invalid_argument("trailing characters");
        if (g.count < 1) throw std::invalid_argument("count must be >= 1");
        if (!(g.start <= g.stop))
            throw std::invalid_argument("start must be <= stop");
        return g;
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("grid '" + text + "': " + e.what());
    } catch (const std::exception&) {
        throw std::invalid_argument("grid '" + text +
                                    "': expected value or start:stop:count");
    }
}

std::vector<double> GridSpec::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        v.push_back(start);
        return v;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i)
        v.push_back(i == count - 1 ? stop : start + step * i);
    return v;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (const double* d = std::get_if<double>(&row[c]))
                out += format_double(*d);
            else if (const long long* i = std::get_if<long long>(&row[c]))
                out += std::to_string(*i);
            else
                out += std::get<std::string>(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& key = table.columns[c];
            if (const double* d = std::get_if<double>(&row[c])) {
                if (std::isfinite(*d))
                    obj[key] = *d;
                else
                    obj[key] = format_double(*d); // JSON has no nan/inf literals
            } else if (const long long* i = std::get_if<long long>(&row[c])) {
                obj[key] = *i;
            } else {
                obj[key] = std::get<std::string>(row[c]);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

Table run_static(const GridSpec& energies, const GridSpec& durations,
                 const SweepOptions& opt) {
    const auto Es = energies.values();
    const auto Ts = durations.values();
    const Dimension dim(opt.dimension);
    const double cscale = opt.reattach_coupling ? opt.coupling : 1.0;
    const double escale = opt.reattach_coupling ? opt.coupling * opt.coupling : 1.0;

    Table table;
    table.columns = {"energy",      "duration",    "coherence", "delta_e_coh",
                     "delta_e_vac", "commutator_term", "status"};
    table.rows.resize(Es.size() * Ts.size());

    std::atomic<bool> failed{false};
    parallel_rows(opt.jobs, table.rows.size(), [&](std::size_t i) {
        const double E = Es[i / Ts.size()];
        const double T = Ts[i % Ts.size()];
        std::vector<Cell> row;
        row.reserve(7);
        row.emplace_back(E);
        row.emplace_back(T);
        try {
            const auto res =
                harvest::evaluate(dim, FieldConfig{E, opt.phase_r},
                                  SwitchingProfile::from_duration(T), opt.radius,
                                  opt.path, opt.quadrature);
            row.emplace_back(res.coherence * cscale);
            row.emplace_back(res.delta_e_coh * escale);
            row.emplace_back(res.delta_e_vac * escale);
            row.emplace_back(res.commutator_term * escale);
            row.emplace_back(std::string("ok"));
        } catch (const std::exception& e) {
            const double nan = std::nan("");
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(sanitize_status(e.what()));
            failed = true;
        }
        table.rows[i] = std::move(row);
    });
    table.has_failures = failed;
    return table;
}

Table run_moving(const GridSpec& energies, const GridSpec& durations,
                 const GridSpec& velocities, const SweepOptions& opt) {
    const auto Es = energies.values();
    const auto Ts = durations.values();
    const auto Vs = velocities.values();
    const Dimension dim(opt.dimension);
    const double cscale = opt.reattach_coupling ? opt.coupling : 1.0;

    Table table;
    table.columns = {"energy",           "duration",        "velocity",
                     "coherence_static", "coherence_moving", "swelling_ratio",
                     "status"};
    table.rows.resize(Es.size() * Ts.size() * Vs.size());

    std::atomic<bool> failed{false};
    parallel_rows(opt.jobs, table.rows.size(), [&](std::size_t i) {
        const double E = Es[i / (Ts.size() * Vs.size())];
        const double T = Ts[(i / Vs.size()) % Ts.size()];
        const double v = Vs[i % Vs.size()];
        std::vector<Cell> row;
        row.reserve(7);
        row.emplace_back(E);
        row.emplace_back(T);
        row.emplace_back(v);
        try {
            const FieldConfig field{E, opt.phase_r};
            const auto sw = SwitchingProfile::from_duration(T);
            const double c0 =
                harvest::coherence_static_closed(dim, field, sw, opt.radius);
            const double cv = motion::coherence_moving(dim, field, sw, opt.radius,
                                                       v, opt.quadrature);
            row.emplace_back(c0 * cscale);
            row.emplace_back(cv * cscale);
            row.emplace_back(c0 > 0 ? cv / c0 : std::nan(""));
            row.emplace_back(std::string("ok"));
        } catch (const std::exception& e) {
            const double nan = std::nan("");
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(sanitize_status(e.what()));
            failed = true;
        }
        table.rows[i] = std::move(row);
    });
    table.has_failures = failed;
    return table;
}

Table run_catalysis(const GridSpec& energies, const std::vector<double>& velocities,
                    const SweepOptions& opt) {
    const auto Es = energies.values();
    const Dimension dim(opt.dimension);
    const double cscale = opt.reattach_coupling ? opt.coupling : 1.0;
    const double escale = opt.reattach_coupling ? opt.coupling * opt.coupling : 1.0;

    Table table;
    table.columns = {"energy", "velocity", "coherence", "delta_e", "status"};
    table.rows.resize(Es.size() * velocities.size());

    std::atomic<bool> failed{false};
    parallel_rows(opt.jobs, table.rows.size(), [&](std::size_t i) {
        const double E = Es[i / velocities.size()];
        const double v = velocities[i % velocities.size()];
        std::vector<Cell> row;
        row.reserve(5);
        row.emplace_back(E);
        row.emplace_back(v);
        try {
            row.emplace_back(catalysis::catalytic_coherence(dim, E, v) * cscale);
            row.emplace_back(
                catalysis::catalysis_energy_cost(dim, E, v, opt.coupling) * escale);
            row.emplace_back(std::string("ok"));
        } catch (const std::exception& e) {
            const double nan = std::nan("");
            row.emplace_back(nan);
            row.emplace_back(nan);
            row.emplace_back(sanitize_status(e.what()));
            failed = true;
        }
        table.rows[i] = std::move(row);
    });
    table.has_failures = failed;
    return table;
}

Table run_catalysis_series(double energy, double velocity, int harvests,
                           const SweepOptions& opt) {
    const Dimension dim(opt.dimension);
    Table table;
    table.columns = {"energy", "velocity", "harvest_index", "coherence"};
    const double first =
        catalysis::catalytic_coherence(dim, energy, velocity) *
        (opt.reattach_coupling ? opt.coupling : 1.0);
    // Instantaneous coupling: the commutator vanishes and the series is flat.
    const auto series =
        catalysis::repeated_harvest_series(first, 0.0, opt.coupling, harvests);
    for (int k = 0; k < harvests; ++k)
        table.rows.push_back({Cell{energy}, Cell{velocity},
                              Cell{static_cast<long long>(k + 1)},
                              Cell{series[static_cast<std::size_t>(k)]}});
    return table;
}

namespace {

struct FigureDef {
    const char* id;
    const char* kind; // static | commutator | moving | moving_compare |
                      // catalysis_c | catalysis_e
    int dimension;
    int phase_r;
    double energy;   // kind-specific
    double velocity;
};

constexpr FigureDef kFigures[] = {
    {"fig3a", "static", 1, 1, 0, 0},
    {"fig3b", "static", 1, 0, 0, 0},
    {"fig4a", "static", 3, 1, 0, 0},
    {"fig4b", "static", 3, 0, 0, 0},
    {"fig5", "commutator", 0, 0, 0, 0},
    {"fig6a", "moving", 1, 1, 0, 0.8},
    {"fig6b", "moving", 1, 1, 0, 0.8},
    {"fig6c", "moving_compare", 1, 1, 0.1, 0.8},
    {"fig6d", "moving", 1, 0, 0, 0.8},
    {"fig6e", "moving", 1, 0, 0, 0.8},
    {"fig6f", "moving_compare", 1, 0, 0.1, 0.8},
    {"fig7a", "moving", 3, 1, 0, 0.8},
    {"fig7b", "moving", 3, 1, 0, 0.8},
    {"fig7c", "moving_compare", 3, 1, 0.2, 0.8},
    {"fig7d", "moving", 3, 0, 0, 0.8},
    {"fig7e", "moving", 3, 0, 0, 0.8},
    {"fig7f", "moving_compare", 3, 0, 0.2, 0.8},
    {"fig8a", "catalysis_c", 1, 1, 0, 0.0},
    {"fig8b", "catalysis_c", 1, 1, 0, 0.6},
    {"fig8c", "catalysis_c", 1, 1, 0, 0.8},
    {"fig8d", "catalysis_c", 3, 1, 0, 0.0},
    {"fig8e", "catalysis_c", 3, 1, 0, 0.6},
    {"fig8f", "catalysis_c", 3, 1, 0, 0.8},
    {"fig9a", "catalysis_e", 1, 1, 0, 0.0},
    {"fig9b", "catalysis_e", 1, 1, 0, 0.6},
    {"fig9c", "catalysis_e", 1, 1, 0, 0.8},
    {"fig9d", "catalysis_e", 3, 1, 0, 0.0},
    {"fig9e", "catalysis_e", 3, 1, 0, 0.6},
    {"fig9f", "catalysis_e", 3, 1, 0, 0.8},
};

const FigureDef& find_figure(const std::string& id) {
    for (const auto& f : kFigures)
        if (id == f.id) return f;
    std::ostringstream os;
    os << "unknown figure id '" << id << "'; valid:";
    for (const auto& f : kFigures) os << ' ' << f.id;
    throw std::invalid_argument(os.str());
}

} // namespace

std::vector<std::string> list_figures() {
    std::vector<std::string> ids;
    for (const auto& f : kFigures) ids.emplace_back(f.id);
    return ids;
}

Table run_figure(const std::string& figure_id, int nx, int ny,
                 const SweepOptions& base_opt) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("figure grids need at least 2 points per axis");
    const FigureDef& fig = find_figure(figure_id);
    SweepOptions opt = base_opt;
    opt.radius = 1.0; // all panels assume R = 1/Omega

    const GridSpec e_axis{0.01, 5.0, nx};
    const GridSpec t_axis{0.0, 3.0, ny};

    const std::string kind = fig.kind;
    if (kind == "static") {
        opt.dimension = fig.dimension;
        opt.phase_r = fig.phase_r;
        return run_static(e_axis, t_axis, opt);
    }
    if (kind == "commutator") {
        // commutator term vs duration for both dimensions
        Table table;
        table.columns = {"duration", "commutator_n1", "commutator_n3"};
        for (const double T : GridSpec{0.0, 3.0, std::max(nx, ny)}.values()) {
            const auto sw = SwitchingProfile::from_duration(T);
            table.rows.push_back(
                {Cell{T}, Cell{harvest::commutator_term(Dimension(1), sw, 1.0)},
                 Cell{harvest::commutator_term(Dimension(3), sw, 1.0)}});
        }
        return table;
    }
    if (kind == "moving") {
        opt.dimension = fig.dimension;
        opt.phase_r = fig.phase_r;
        return run_moving(e_axis, t_axis, GridSpec::single(fig.velocity), opt);
    }
    if (kind == "moving_compare") {
        opt.dimension = fig.dimension;
        opt.phase_r = fig.phase_r;
        return run_moving(GridSpec::single(fig.energy), t_axis,
                          GridSpec::single(fig.velocity), opt);
    }
    opt.dimension = fig.dimension;
    opt.phase_r = 1;
    return run_catalysis(e_axis, {fig.velocity}, opt);
}

std::string gnuplot_script(const std::string& figure_id,
                           const std::string& data_path) {
    const FigureDef& fig = find_figure(figure_id);
    std::ostringstream os;
    os << "# gnuplot script for " << figure_id << "\n";
    os << "set datafile separator ','\n";
    const std::string kind = fig.kind;
    if (kind == "static") {
        os << "set dgrid3d\nset xlabel 'E'\nset ylabel 'T'\n";
        os << "splot '" << data_path << "' every ::1 using 1:2:3 with pm3d title 'C'\n";
    } else if (kind == "commutator") {
        os << "set xlabel 'T'\n";
        os << "plot '" << data_path << "' every ::1 using 1:2 with lines title 'n=1', \\\n"
           << "     '" << data_path << "' every ::1 using 1:3 with lines title 'n=3'\n";
    } else if (kind == "moving") {
        os << "set dgrid3d\nset xlabel 'E'\nset ylabel 'T'\n";
        os << "splot '" << data_path
           << "' every ::1 using 1:2:5 with pm3d title 'C_v'\n";
    } else if (kind == "moving_compare") {
        os << "set xlabel 'T'\n";
        os << "plot '" << data_path
           << "' every ::1 using 2:4 with lines title 'static', \\\n"
           << "     '" << data_path
           << "' every ::1 using 2:5 with lines title 'moving'\n";
    } else {
        os << "set xlabel 'E'\n";
        os << "plot '" << data_path << "' every ::1 using 1:"
           << (kind == std::string("catalysis_c") ? 3 : 4)
           << " with lines title '" << (kind == std::string("catalysis_c") ? "C" : "dE")
           << "'\n";
    }
    return os.str();
}

} // namespace coharvest::sweep
