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

#include "coharvest/model.hpp"
#include "coharvest/quadrature.hpp"
#include "coharvest/specfun.hpp"

using namespace coharvest;
using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;

TEST_CASE("effective scale") {
    CHECK(model::effective_scale(Dimension(1), 1.7) ==
          doctest::Approx(1.7).epsilon(1e-14));
    CHECK(model::effective_scale(Dimension(3), 1.7) ==
          doctest::Approx(0.85).epsilon(1e-14));
    CHECK(model::effective_scale(Dimension(1), 0.0) == 0.0);
    CHECK_THROWS_AS(model::effective_scale(Dimension(1), -1.0),
                    std::invalid_argument);
}

TEST_CASE("switching transform") {
    CHECK(model::switching_fourier(SwitchingProfile::delta(), 12.3) == 1.0);
    CHECK(model::switching_fourier(SwitchingProfile::delta(), -0.5) == 1.0);
    CHECK(model::switching_fourier(SwitchingProfile::gaussian(2.0), 0.0) == 1.0);
    CHECK(model::switching_fourier(SwitchingProfile::gaussian(1.0), 2.0) ==
          doctest::Approx(0.04321391826377225).epsilon(1e-12));

    // |X| <= 1 for every sampled argument and duration
    for (double T : {0.1, 0.7, 2.5})
        for (double arg = -8.0; arg <= 8.0; arg += 0.25)
            CHECK(model::switching_fourier(SwitchingProfile::gaussian(T), arg) <=
                  1.0);

    // the transform value agrees with direct quadrature of the profile
    const auto I = quad::integrate_semi_infinite(
        [](double tau) {
            return 2.0 * std::cos(2.0 * tau) * std::exp(-tau * tau / M_PI) / M_PI;
        },
        {1e-13, 1e-12, 2000, 1e-18}, 1.0);
    CHECK(model::switching_fourier(SwitchingProfile::gaussian(1.0), 2.0) ==
          doctest::Approx(I.value).epsilon(1e-11));
}

TEST_CASE("smearing transform") {
    CHECK(model::smearing_fourier(Dimension(3), 0.0, 5.0) == 1.0);
    CHECK(model::smearing_fourier(Dimension(1), 1.0, 0.0) == 1.0);
    CHECK(model::smearing_fourier(Dimension(3), 1.0, 1.0) ==
          doctest::Approx(0.82172495803387718).epsilon(1e-12));
    for (double k : {0.1, 1.0, 4.0})
        CHECK(model::smearing_fourier(Dimension(3), 1.0, k) > 0.0);

    // n = 3 Fourier-transform oracle: F(k) = (4 pi / k) Int xi f(xi) sin(k xi)
    const double R = 1.0, k = 1.0;
    const double Rn = model::effective_scale(Dimension(3), R);
    const auto I = quad::integrate_semi_infinite(
        [=](double xi) {
            const double f = std::exp(-xi * xi / (M_PI * Rn * Rn)) /
                             std::pow(M_PI * Rn, 3.0);
            return 4.0 * M_PI / k * xi * f * std::sin(k * xi);
        },
        {1e-13, 1e-12, 2000, 1e-18}, Rn);
    CHECK(model::smearing_fourier(Dimension(3), R, k) ==
          doctest::Approx(I.value).epsilon(1e-10));
}

TEST_CASE("coherent amplitude") {
    const FieldConfig f0{1.0, 0};
    const FieldConfig f1{1.0, 1};
    const auto a0 = model::coherent_amplitude(Dimension(1), f0, 0.0);
    CHECK(a0.real() == doctest::Approx(0.56418958354775629).epsilon(1e-13));
    CHECK(a0.imag() == 0.0);
    const auto a1 = model::coherent_amplitude(Dimension(1), f1, 0.0);
    CHECK(a1.real() == 0.0);
    CHECK(a1.imag() == doctest::Approx(0.56418958354775629).epsilon(1e-13));

    CHECK_THROWS_AS(model::coherent_amplitude(Dimension(1), FieldConfig{0.0, 0}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((FieldConfig{1.0, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((FieldConfig{-1.0, 0}.validate()), std::invalid_argument);
}

TEST_CASE("amplitude normalization and mean energy") {
    for (const auto& [n, E] : std::vector<std::pair<int, double>>{{1, 0.7},
                                                                  {3, 1.3}}) {
        const Dimension dim(n);
        const FieldConfig field{E, 0};
        const double sn = specfun::unit_sphere_area(n);
        auto density = [&](double k) {
            const double m = model::coherent_amplitude_modulus(dim, field, k);
            return sn * std::pow(k, n - 1.0) * m * m;
        };
        const double hint = 2.0 * model::effective_scale(dim, E);
        const auto number = quad::integrate_semi_infinite(
            density, {1e-13, 1e-12, 2000, 1e-18}, hint);
        CHECK(number.value == doctest::Approx(1.0).epsilon(1e-8));
        const auto energy = quad::integrate_semi_infinite(
            [&](double k) { return density(k) * k; }, {1e-13, 1e-12, 2000, 1e-18},
            hint);
        CHECK(energy.value == doctest::Approx(E).epsilon(1e-8));
    }
}

TEST_CASE("switching profile construction") {
    CHECK(SwitchingProfile::from_duration(0.0).is_delta());
    CHECK_FALSE(SwitchingProfile::from_duration(0.5).is_delta());
    CHECK(SwitchingProfile::from_duration(0.5).duration() == 0.5);
    CHECK(SwitchingProfile::delta().duration() == 0.0);
    CHECK_THROWS_AS(SwitchingProfile::gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SwitchingProfile::from_duration(-1.0), std::invalid_argument);
}

TEST_CASE("detector config validation") {
    model::DetectorConfig det;
    det.velocity = 1.0;
    CHECK_THROWS_AS(det.validate(), std::invalid_argument);
    det = {};
    det.coupling = 0.5;
    CHECK(det.perturbative_warning());
    det.coupling = 0.01;
    CHECK_FALSE(det.perturbative_warning());
}

TEST_CASE("config file parsing") {
    const std::string good =
        "# run setup\n"
        "dimension = 3\n"
        "energy = 0.5\n"
        "duration = 1.5\n"
        "radius = 2\n"
        "velocity = 0.8\n"
        "phase_r = 0\n"
        "coupling = 0.001\n"
        "switching_kind = gaussian\n";
    const auto cfg = model::parse_config_text(good);
    CHECK(cfg.dimension == 3);
    CHECK(cfg.field.mean_energy == 0.5);
    CHECK(cfg.field.phase_r == 0);
    CHECK(cfg.switching.mean_duration == 1.5);
    CHECK(cfg.detector.mean_radius == 2.0);
    CHECK(cfg.detector.velocity == 0.8);
    CHECK(cfg.detector.coupling == 0.001);

    SUBCASE("unknown key names the key and line") {
        try {
            model::parse_config_text("energy = 1\nbogus = 2\n");
            FAIL("expected ConfigError");
        } catch (const model::ConfigError& e) {
            CHECK(e.key == "bogus");
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("bad value names the key and line") {
        try {
            model::parse_config_text("dimension = 1\nvelocity = fast\n");
            FAIL("expected ConfigError");
        } catch (const model::ConfigError& e) {
            CHECK(e.key == "velocity");
            CHECK(e.line == 2);
        }
    }
    SUBCASE("out-of-contract values rejected") {
        CHECK_THROWS_AS(model::parse_config_text("velocity = 1.5\n"),
                        model::ConfigError);
        CHECK_THROWS_AS(model::parse_config_text("dimension = 2\n"),
                        model::ConfigError);
        CHECK_THROWS_AS(model::parse_config_text("phase_r = 7\n"),
                        model::ConfigError);
        CHECK_THROWS_AS(model::parse_config_text("switching_kind = square\n"),
                        model::ConfigError);
    }
    SUBCASE("delta switching") {
        const auto c = model::parse_config_text("switching_kind = delta\n");
        CHECK(c.switching.is_delta());
        const auto c2 = model::parse_config_text("duration = 0\n");
        CHECK(c2.switching.is_delta());
    }
}
