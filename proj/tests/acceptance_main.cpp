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

// Acceptance suite: runs every release gate end to end and prints one
// pass/fail line per criterion.  Exit status 0 iff all criteria hold.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coharvest/catalysis.hpp"
#include "coharvest/harvest.hpp"
#include "coharvest/model.hpp"
#include "coharvest/motion.hpp"
#include "coharvest/specfun.hpp"
#include "coharvest/verify.hpp"

namespace {

using coharvest::verify::CheckResult;

struct Criterion {
    int id;
    std::string description;
    bool passed = true;
    std::string detail;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
    const std::string cmd =
        std::string(COHARVEST_CLI_PATH) + " " + args + " > " + out_path;
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Folds the named verify checks into a criterion.
void fold(Criterion& crit, const std::map<std::string, CheckResult>& checks,
          const std::vector<std::string>& names) {
    for (const auto& name : names) {
        const auto it = checks.find(name);
        if (it == checks.end()) {
            crit.passed = false;
            crit.detail += name + ": missing; ";
            continue;
        }
        if (!it->second.passed) crit.passed = false;
        std::ostringstream os;
        os << name << (it->second.passed ? " ok" : " FAILED")
           << " (disc=" << it->second.discrepancy
           << ", tol=" << it->second.tolerance << "); ";
        crit.detail += os.str();
    }
}

} // namespace

int main() {
    using namespace coharvest;
    using model::Dimension;
    using model::FieldConfig;
    using model::SwitchingProfile;

    std::map<std::string, CheckResult> checks;
    for (auto& c : verify::run_checks()) checks[c.module + "." + c.name] = c;

    std::vector<Criterion> criteria;

    {
        Criterion c{1,
                    "closed forms match quadrature oracles on the standard grid "
                    "(1e-7 relative / 1e-9 absolute)"};
        fold(c, checks, {"harvest.closed_vs_quadrature_grid"});
        criteria.push_back(c);
    }
    {
        Criterion c{2,
                    "instantaneous switching is optimal: C(T) <= C(0), C <= "
                    "bound, equality at (delta, r=1, v=0) within 1e-8"};
        fold(c, checks,
             {"harvest.delta_switching_optimal", "harvest.upper_bound_dominance",
              "harvest.upper_bound_equality_delta"});
        criteria.push_back(c);
    }
    {
        Criterion c{3,
                    "vanishing limits: C(E=0) = 0 and C(r=0, delta) = 0 exactly; "
                    "C(E=100, T=1, R=1) below 1e-3 of the grid maximum"};
        std::ostringstream os;
        for (int n : {1, 3}) {
            const Dimension dim(n);
            if (harvest::coherence_static_closed(dim, FieldConfig{0.0, 1},
                                                 SwitchingProfile::gaussian(1.0),
                                                 1.0) != 0.0)
                c.passed = false;
            if (harvest::coherence_static_closed(dim, FieldConfig{1.0, 0},
                                                 SwitchingProfile::delta(),
                                                 1.0) != 0.0)
                c.passed = false;
        }
        os << "exact zeros hold; ";
        // grid maximum over the criterion-1 standard grid
        double grid_max = 0.0;
        for (int n : {1, 3})
            for (int r : {0, 1})
                for (double E : {0.1, 0.5, 1.0, 2.0, 5.0})
                    for (double T : {0.0, 0.25, 1.0, 2.0})
                        for (double R : {0.5, 1.0, 2.0})
                            grid_max = std::max(
                                grid_max,
                                harvest::coherence_static_closed(
                                    Dimension(n), FieldConfig{E, r},
                                    SwitchingProfile::from_duration(T), R));
        const double gate = 1e-3 * grid_max;
        os << "grid max " << grid_max << ", gate " << gate << "; ";
        for (int n : {1, 3})
            for (int r : {0, 1}) {
                const double c100 = harvest::coherence_static_closed(
                    Dimension(n), FieldConfig{100.0, r},
                    SwitchingProfile::gaussian(1.0), 1.0);
                os << "C(n=" << n << ",r=" << r << ",E=100)=" << c100
                   << (c100 < gate ? " ok; " : " EXCEEDS GATE; ");
                if (!(c100 < gate)) c.passed = false;
            }
        if (!c.passed)
            os << "[the unit-mean-number amplitude widens with E, so C falls "
                  "only as E^{-n/2}: C(100)/C(1000) = sqrt(10) in 1+1; the "
                  "1e-3 gate at E=100 is unreachable in 1+1 and the criterion "
                  "is reported red rather than loosened]";
        c.detail = os.str();
        criteria.push_back(c);
    }
    {
        Criterion c{4,
                    "angular-average and Doppler-mixture representations agree "
                    "within 1e-6 at v in {0.3, 0.8}, both dimensions"};
        fold(c, checks, {"motion.doppler_equivalence"});
        criteria.push_back(c);
    }
    {
        Criterion c{5,
                    "swelling: present at sub-resonance energies for v=0.8, "
                    "absent at resonance, weaker in 3+1 than in 1+1"};
        fold(c, checks, {"motion.swelling_regions"});
        criteria.push_back(c);
    }
    {
        Criterion c{6,
                    "instantaneous-protocol closed forms: moving agreement "
                    "within 1e-6, static limit within 1e-10, single-peaked "
                    "profile, positive cost with oracle-matched vacuum term"};
        fold(c, checks,
             {"catalysis.moving_agreement", "catalysis.static_limit_agreement",
              "catalysis.resonance_profile", "catalysis.extraction_cost"});
        criteria.push_back(c);
    }
    {
        Criterion c{7,
                    "truncated-Fock channel: 5 identical harvests within 1e-12, "
                    "valid output states, dual-path energy within 1e-9 and "
                    "positive over 50 random configs, residual ~ lambda^3"};
        fold(c, checks,
             {"fockoracle.exact_catalysis", "fockoracle.channel_validity",
              "fockoracle.delta_energy_dual_path", "fockoracle.perturbative_residual_scaling"});
        criteria.push_back(c);
    }
    {
        Criterion c{8,
                    "second-order recursion: simulated series ratio equals "
                    "|1 + (lambda^2/2)(|p|^2-|q|^2)| and matches the "
                    "repeated-harvest series"};
        fold(c, checks, {"fockoracle.perturbative_recursion"});
        criteria.push_back(c);
    }
    {
        Criterion c{9, "quoted numbers and amplitude normalization"};
        bool ok = true;
        std::ostringstream os;
        const double t = catalysis::harvest_time_estimate(1e-3, 1e15);
        if (std::abs(t - 1e-12) > 1e-15 * 1e3) ok = false;
        os << "time estimate " << t << "; ";
        if (std::abs(model::effective_scale(Dimension(1), 1.0) - 1.0) > 1e-14)
            ok = false;
        if (std::abs(model::effective_scale(Dimension(3), 1.0) - 0.5) > 1e-14)
            ok = false;
        if (std::abs(specfun::unit_sphere_area(1) - 2.0) > 1e-13) ok = false;
        if (std::abs(specfun::unit_sphere_area(3) - 4.0 * M_PI) > 1e-12)
            ok = false;
        os << "effective scales and sphere areas ok; ";
        c.passed = ok;
        c.detail = os.str();
        fold(c, checks, {"model.amplitude_moments"});
        criteria.push_back(c);
    }
    {
        Criterion c{10,
                    "special functions: recurrence residual < 1e-9 relative, "
                    "D_{-1}(0) = sqrt(pi/2) within 1e-10"};
        const double d = specfun::parabolic_cylinder_D(-1.0, 0.0).value;
        if (std::abs(d - std::sqrt(M_PI / 2.0)) > 1e-10) c.passed = false;
        {
            std::ostringstream os;
            os << "D_{-1}(0) = " << d << "; ";
            c.detail = os.str();
        }
        fold(c, checks, {"specfun.pcf_recurrence", "specfun.pcf_vs_bruteforce"});
        criteria.push_back(c);
    }
    {
        Criterion c{11,
                    "CLI determinism (byte-identical reruns) and verify exit "
                    "status 0 on the shipped defaults"};
        bool ok = true;
        std::ostringstream os;
        const std::string args =
            "static --energy 0.1:2:5 --duration 0:2:4 --dimension 3 --phase 0";
        const int e1 = run_cli(args, "acceptance_run1.csv");
        const int e2 = run_cli(args + " --jobs 4", "acceptance_run2.csv");
        const std::string out1 = slurp("acceptance_run1.csv");
        const std::string out2 = slurp("acceptance_run2.csv");
        std::remove("acceptance_run1.csv");
        std::remove("acceptance_run2.csv");
        if (e1 != 0 || e2 != 0) {
            ok = false;
            os << "CLI exit codes " << e1 << "/" << e2 << "; ";
        }
        if (out1 != out2 || out1.empty()) {
            ok = false;
            os << "outputs differ or empty; ";
        } else {
            os << "reruns byte-identical (" << out1.size() << " bytes); ";
        }
        const int ev = run_cli("verify", "acceptance_verify.txt");
        const std::string vout = slurp("acceptance_verify.txt");
        std::remove("acceptance_verify.txt");
        if (ev != 0) {
            ok = false;
            os << "verify exit " << ev << "; ";
        } else {
            os << "verify exit 0; ";
        }
        if (vout.find("all checks passed") == std::string::npos) ok = false;
        c.passed = ok;
        c.detail = os.str();
        criteria.push_back(c);
    }

    bool all = true;
    for (const auto& c : criteria) {
        std::printf("[%s] criterion %2d: %s\n", c.passed ? "PASS" : "FAIL", c.id,
                    c.description.c_str());
        if (!c.passed) std::printf("       %s\n", c.detail.c_str());
        all = all && c.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
