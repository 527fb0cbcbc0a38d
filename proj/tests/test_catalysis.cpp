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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coharvest/catalysis.hpp"
#include "coharvest/harvest.hpp"
#include "coharvest/motion.hpp"

using namespace coharvest;
using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;

TEST_CASE("catalytic coherence limits") {
    for (int n : {1, 3}) {
        CHECK(catalysis::catalytic_coherence(Dimension(n), 0.0, 0.0) == 0.0);
        CHECK(catalysis::catalytic_coherence(Dimension(n), 0.0, 0.8) == 0.0);
    }
    // frozen values from the independent angular-average quadrature
    CHECK(catalysis::catalytic_coherence(Dimension(1), 1.0, 0.0) ==
          doctest::Approx(0.81422443772587275).epsilon(1e-12));
    CHECK(catalysis::catalytic_coherence(Dimension(1), 1.0, 0.8) ==
          doctest::Approx(0.6372150635715512).epsilon(1e-12));
    CHECK(catalysis::catalytic_coherence(Dimension(3), 1.0, 0.8) ==
          doctest::Approx(0.57015714441444608).epsilon(1e-12));
}

TEST_CASE("static limit matches the instantaneous closed form") {
    for (double E : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const double cat = catalysis::catalytic_coherence(Dimension(1), E, 0.0);
        const double stat = harvest::coherence_static_closed(
            Dimension(1), FieldConfig{E, 1}, SwitchingProfile::delta(), 1.0);
        CHECK(std::abs(cat - stat) < 1e-10);
    }
}

TEST_CASE("moving agreement with the angular average") {
    for (int n : {1, 3})
        for (double v : {0.3, 0.6, 0.8})
            for (double E : {0.3, 1.0, 2.0}) {
                const double cat =
                    catalysis::catalytic_coherence(Dimension(n), E, v);
                const double mov = motion::coherence_moving(
                    Dimension(n), FieldConfig{E, 1}, SwitchingProfile::delta(),
                    1.0, v);
                CHECK(std::abs(cat - mov) < 1e-6);
            }
}

TEST_CASE("small-velocity fallback continuity in 3+1") {
    const Dimension dim(3);
    for (double E : {0.5, 1.0, 2.0}) {
        // threshold straddle: closed form just above, quadrature just below
        const double below = catalysis::catalytic_coherence(dim, E, 0.9e-3);
        const double above = catalysis::catalytic_coherence(dim, E, 1.1e-3);
        CHECK(std::abs(above - below) < 1e-6);
        // v -> 0 continuity through the fallback
        const double tiny = catalysis::catalytic_coherence(dim, E, 1e-6);
        const double zero = catalysis::catalytic_coherence(dim, E, 0.0);
        CHECK(std::abs(tiny - zero) < 1e-6);
    }
}

TEST_CASE("speed monotonicity at resonance and E-profile") {
    for (int n : {1, 3}) {
        const Dimension dim(n);
        double prev = catalysis::catalytic_coherence(dim, 1.0, 0.0);
        for (double v : {0.6, 0.8}) {
            const double c = catalysis::catalytic_coherence(dim, 1.0, v);
            CHECK(c < prev);
            prev = c;
        }
        // vanishes at large energy, single maximum of order the gap
        double best = 0.0, bestE = 0.0;
        for (double E = 0.05; E <= 6.0; E += 0.05) {
            const double c = catalysis::catalytic_coherence(dim, E, 0.0);
            if (c > best) {
                best = c;
                bestE = E;
            }
        }
        CHECK(bestE > 0.2);
        CHECK(bestE < 3.0);
        // algebraic E^{-n/2} falloff toward zero
        const double far = catalysis::catalytic_coherence(dim, 50.0, 0.0);
        CHECK(far < 0.2 * best);
        CHECK(catalysis::catalytic_coherence(dim, 200.0, 0.0) < far);
    }
}

TEST_CASE("extraction cost") {
    // vacuum part equals the general vacuum cost at the protocol radius
    for (int n : {1, 3}) {
        const Dimension dim(n);
        const double vac_only =
            catalysis::catalysis_energy_cost(dim, 0.0, 0.0, 1e-3);
        const double general = harvest::energy_cost_vacuum(
            dim, SwitchingProfile::delta(), 1.0);
        CHECK(std::abs(vac_only - general) < 1e-12);
    }
    CHECK(catalysis::catalysis_energy_cost(Dimension(1), 0.0, 0.0, 1e-3) ==
          doctest::Approx(0.086483039836841152).epsilon(1e-12));

    // the vacuum part does not depend on the field energy
    const Dimension dim(1);
    const double c1 = catalysis::catalysis_energy_cost(dim, 0.7, 0.0, 1e-3);
    const double cc1 = catalysis::catalytic_coherence(dim, 0.7, 0.0);
    const double c2 = catalysis::catalysis_energy_cost(dim, 2.0, 0.0, 1e-3);
    const double cc2 = catalysis::catalytic_coherence(dim, 2.0, 0.0);
    CHECK(c1 - cc1 * cc1 / 4.0 ==
          doctest::Approx(c2 - cc2 * cc2 / 4.0).epsilon(1e-13));

    // positive everywhere sampled, and increasing with speed at low energy
    for (int n : {1, 3}) {
        double prev = 0.0;
        bool first = true;
        for (double v : {0.0, 0.3, 0.6, 0.8}) {
            const double c =
                catalysis::catalysis_energy_cost(Dimension(n), 0.1, v, 1e-3);
            CHECK(c > 0.0);
            if (!first) CHECK(c > prev);
            prev = c;
            first = false;
        }
    }
    CHECK_THROWS_AS(catalysis::catalysis_energy_cost(Dimension(1), 1.0, 0.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("repeated harvest series") {
    // vanishing commutator: the series is exactly constant
    const auto flat = catalysis::repeated_harvest_series(0.5, 0.0, 1e-3, 7);
    CHECK(flat.size() == 7);
    for (const double c : flat) CHECK(c == 0.5);

    // stated recursion arithmetic: tiny per-step decay, bounded total drift
    const auto series =
        catalysis::repeated_harvest_series(1.0, -0.05, 1e-3, 100);
    const double factor = 1.0 - 2.5e-8;
    CHECK(series[1] / series[0] == doctest::Approx(factor).epsilon(1e-12));
    CHECK(std::abs(series.back() / series.front() - 1.0) < 3e-6);
    CHECK(series.back() < series.front());

    CHECK_THROWS_AS(catalysis::repeated_harvest_series(1.0, 0.0, 1e-3, 0),
                    std::invalid_argument);
}

TEST_CASE("harvest time estimate") {
    CHECK(catalysis::harvest_time_estimate(1e-3, 1e15) ==
          doctest::Approx(1e-12).epsilon(1e-14));
    CHECK(catalysis::harvest_time_estimate(1.0, 1.0) == 1.0);
    CHECK(catalysis::harvest_time_estimate(1e-2, 1e15) ==
          doctest::Approx(1e-13).epsilon(1e-14));
    CHECK_THROWS_AS(catalysis::harvest_time_estimate(0.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("catalysis report") {
    const auto rep =
        catalysis::make_report(Dimension(1), 1.0, 0.0, 1e-3, 1e15);
    CHECK(rep.per_harvest_coherence ==
          doctest::Approx(1e-3 * 0.81422443772587275).epsilon(1e-12));
    CHECK(rep.per_extraction_cost > 0.0);
    // unit-coherence bracketing
    CHECK(rep.per_harvest_coherence * rep.harvests_for_unit_coherence >= 1.0);
    CHECK(rep.per_harvest_coherence * (rep.harvests_for_unit_coherence - 1) <
          1.0);
    // order-of-magnitude agreement with the coarse estimate
    CHECK(rep.estimated_total_time_seconds > 1e-13);
    CHECK(rep.estimated_total_time_seconds < 1e-11);
}
