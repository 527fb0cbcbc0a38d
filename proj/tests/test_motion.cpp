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

#include "coharvest/motion.hpp"

using namespace coharvest;
using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;

TEST_CASE("doppler energy") {
    CHECK(motion::doppler_energy(1.7, 0.0, 0.3) == 1.7);
    CHECK(motion::doppler_energy(1.0, 0.8, -1.0) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(motion::doppler_energy(1.0, 0.8, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // blue shift times red shift recovers E^2
    const double prod = motion::doppler_energy(1.0, 0.8, -1.0) *
                        motion::doppler_energy(1.0, 0.8, 1.0);
    CHECK(prod == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(motion::doppler_energy(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("moving coherence reduces to static at rest") {
    for (int n : {1, 3}) {
        const Dimension dim(n);
        const FieldConfig field{1.0, 1};
        const auto sw = SwitchingProfile::gaussian(1.0);
        const double stat = harvest::coherence_static_closed(dim, field, sw, 1.0);
        const double mov = motion::coherence_moving(dim, field, sw, 1.0, 0.0);
        CHECK(mov == stat); // degenerate mixture, exact
    }
}

TEST_CASE("1+1 moving coherence is an exact two-point average") {
    const Dimension dim(1);
    const FieldConfig field{1.0, 1};
    const auto sw = SwitchingProfile::gaussian(1.0);
    const double v = 0.8;
    const double c = motion::coherence_moving(dim, field, sw, 1.0, v);
    CHECK(c == motion::coherence_moving(dim, field, sw, 1.0, v)); // reproducible

    const double g = 1.0 / std::sqrt(1.0 - v * v);
    const double manual =
        0.5 * (harvest::coherence_static_closed(
                   dim, FieldConfig{g * (1.0 - v), 1}, sw, 1.0) +
               harvest::coherence_static_closed(
                   dim, FieldConfig{g * (1.0 + v), 1}, sw, 1.0));
    CHECK(c == doctest::Approx(manual).epsilon(1e-14));
    CHECK(c == doctest::Approx(0.30793730530766492).epsilon(1e-9)); // frozen
}

TEST_CASE("angular-average and mixed-amplitude representations agree") {
    for (int n : {1, 3})
        for (int r : {0, 1}) {
            const Dimension dim(n);
            const FieldConfig field{1.0, r};
            const auto sw = SwitchingProfile::gaussian(0.5);
            const double v = 0.8;
            const double ang = motion::coherence_moving(dim, field, sw, 1.0, v);
            const double mixed = motion::coherence_moving_mixed_quadrature(
                dim, field, sw, 1.0, v);
            const double boost = motion::coherence_moving_boost_quadrature(
                dim, field, sw, 1.0, v);
            CHECK(std::abs(ang - mixed) < 1e-6);
            CHECK(std::abs(ang - boost) < 1e-6);
        }
    CHECK(motion::coherence_moving(Dimension(3), FieldConfig{1.0, 1},
                                   SwitchingProfile::gaussian(0.5), 1.0, 0.8) ==
          doctest::Approx(0.32135859722191905).epsilon(1e-8)); // frozen
}

TEST_CASE("doppler-mixed amplitude") {
    const Dimension dim(1);
    const FieldConfig field{1.0, 1};
    // at rest the mixture is the amplitude itself
    const auto a0 = motion::doppler_mixed_amplitude(dim, field, 0.0, 0.7);
    const auto direct = model::coherent_amplitude(dim, field, 0.7);
    CHECK(std::abs(a0 - direct) < 1e-14);

    // constant phase pi r / 2 for all k
    for (int r : {0, 1})
        for (double k : {0.1, 1.0, 3.0}) {
            const FieldConfig f{1.0, r};
            const auto av = motion::doppler_mixed_amplitude(dim, f, 0.5, k);
            if (r == 0) {
                CHECK(av.imag() == 0.0);
                CHECK(av.real() > 0.0);
            } else {
                CHECK(av.real() == 0.0);
                CHECK(av.imag() > 0.0);
            }
        }

    // n = 1: two-point mixture formula
    const double v = 0.5, k = 1.0;
    const double g = 1.0 / std::sqrt(1.0 - v * v);
    double manual = 0.0;
    for (const double mu : {-1.0, 1.0}) {
        const double D = g * (1.0 - v * mu);
        manual += model::coherent_amplitude_modulus(dim, field, k / D) /
                  std::sqrt(D);
    }
    manual /= 2.0;
    const auto av = motion::doppler_mixed_amplitude(dim, field, v, k);
    CHECK(std::abs(av) == doctest::Approx(manual).epsilon(1e-13));
}

TEST_CASE("swelling scan") {
    // at rest every defined ratio is one
    const auto rest = motion::swelling_scan(Dimension(1), {0.5, 1.0},
                                            {0.0, 1.0}, 1, 1.0, 0.0);
    for (const auto& pt : rest) {
        CHECK(pt.swelling_defined);
        CHECK(pt.swelling_ratio == doctest::Approx(1.0).epsilon(1e-14));
    }

    // sub-resonance 1+1 field at v = 0.8 shows swelling at some duration
    std::vector<double> durations;
    for (int i = 0; i <= 15; ++i) durations.push_back(0.2 * i);
    for (int r : {0, 1}) {
        const auto scan =
            motion::swelling_scan(Dimension(1), {0.1}, durations, r, 1.0, 0.8);
        bool found = false;
        for (const auto& pt : scan)
            if (pt.swelling_defined && pt.swelling_ratio > 1.0) found = true;
        CHECK(found);
    }

    // near resonance the moving detector underperforms
    const auto res =
        motion::swelling_scan(Dimension(3), {1.0}, {0.5}, 1, 1.0, 0.8);
    CHECK(res[0].swelling_defined);
    CHECK(res[0].swelling_ratio < 1.0);

    CHECK_THROWS_AS(motion::swelling_scan(Dimension(1), {}, {1.0}, 1, 1.0, 0.5),
                    std::invalid_argument);
}

TEST_CASE("velocity guard") {
    const FieldConfig field{1.0, 1};
    CHECK_THROWS_AS(motion::coherence_moving(Dimension(1), field,
                                             SwitchingProfile::gaussian(1.0), 1.0,
                                             0.9995),
                    std::invalid_argument);
    CHECK_THROWS_AS(motion::coherence_moving(Dimension(1), field,
                                             SwitchingProfile::gaussian(1.0), 1.0,
                                             -0.1),
                    std::invalid_argument);
    // the guard boundary itself is accepted, including the 3+1 polar path
    CHECK_NOTHROW(motion::doppler_energy(1.0, motion::kMaxVelocity, 0.0));
    const double extreme = motion::coherence_moving(
        Dimension(3), field, SwitchingProfile::delta(), 1.0,
        motion::kMaxVelocity);
    CHECK(extreme > 0.0);
    CHECK(std::isfinite(extreme));
}
