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
#include <complex>

#include "coharvest/catalysis.hpp"
#include "coharvest/fockoracle.hpp"

using namespace coharvest;
using Complex = std::complex<double>;

namespace {

fock::FockOracleConfig hermitian_config(double g, double alpha, double lambda,
                                        int N = 48) {
    fock::FockOracleConfig cfg;
    cfg.truncation = N;
    cfg.amp_annihilate = {g, 0.0};
    cfg.amp_create = {g, 0.0};
    cfg.coherent_alpha = {alpha, 0.0};
    cfg.coupling = lambda;
    return cfg;
}

} // namespace

TEST_CASE("operator construction") {
    auto cfg = hermitian_config(0.3, 0.0, 0.1);
    const auto ops = fock::build_operators(cfg);
    // vacuum: <Phi> = 0
    const fock::FieldState vac =
        ops.coherent_state * ops.coherent_state.adjoint();
    CHECK(std::abs((ops.phi * vac).trace()) < 1e-14);

    // real alpha, Hermitian coupling: <Phi> = 2 g alpha
    cfg.coherent_alpha = {1.2, 0.0};
    const auto ops2 = fock::build_operators(cfg);
    const fock::FieldState sig =
        ops2.coherent_state * ops2.coherent_state.adjoint();
    CHECK(std::abs((ops2.phi * sig).trace() - Complex(2.0 * 0.3 * 1.2, 0.0)) <
          1e-10);

    // [Phi, Phi^dagger] = (|p|^2 - |q|^2) I away from the truncation edge
    fock::FockOracleConfig gen = cfg;
    gen.amp_annihilate = {0.4, 0.1};
    gen.amp_create = {0.2, -0.3};
    const auto ops3 = fock::build_operators(gen);
    const Eigen::MatrixXcd comm = ops3.phi * ops3.phi.adjoint() -
                                  ops3.phi.adjoint() * ops3.phi;
    const double expected =
        std::norm(gen.amp_annihilate) - std::norm(gen.amp_create);
    for (int k = 0; k < gen.truncation - 2; ++k) {
        CHECK(std::abs(comm(k, k) - Complex(expected, 0.0)) < 1e-12);
        if (k + 1 < gen.truncation - 2)
            CHECK(std::abs(comm(k, k + 1)) < 1e-12);
    }

    // excessive coherent amplitude for the truncation is rejected
    auto tight = hermitian_config(0.3, 3.0, 0.1, 12);
    CHECK_THROWS_AS(fock::build_operators(tight), std::runtime_error);
    CHECK(hermitian_config(0.3, 4.0, 0.1, 16).truncation_warning());
    CHECK_FALSE(hermitian_config(0.3, 1.0, 0.1, 48).truncation_warning());
}

TEST_CASE("instantaneous channel basics") {
    const auto cfg = hermitian_config(0.3, 1.0, 0.1);
    const auto ops = fock::build_operators(cfg);
    const fock::FieldState sigma =
        ops.coherent_state * ops.coherent_state.adjoint();

    SUBCASE("zero coupling is the identity channel") {
        const auto [qubit, after] = fock::delta_channel(0.0, ops.phi, sigma);
        CHECK(std::abs(qubit.rho(0, 0) - Complex(1, 0)) < 1e-14);
        CHECK(std::abs(qubit.rho(1, 1)) < 1e-14);
        CHECK(std::abs(qubit.rho(0, 1)) < 1e-14);
        CHECK((after - sigma).norm() < 1e-13);
    }

    SUBCASE("vacuum field yields no coherence") {
        const auto vac_cfg = hermitian_config(0.3, 0.0, 0.1);
        const auto vops = fock::build_operators(vac_cfg);
        const fock::FieldState vac =
            vops.coherent_state * vops.coherent_state.adjoint();
        const auto [qubit, after] = fock::delta_channel(0.1, vops.phi, vac);
        CHECK(fock::coherence_of_qubit(qubit) < 1e-14);
    }

    SUBCASE("exact channel matches perturbation theory to O(lambda^3)") {
        const auto big = hermitian_config(0.3, 1.2, 0.05, 40);
        const auto bops = fock::build_operators(big);
        const fock::FieldState bsig =
            bops.coherent_state * bops.coherent_state.adjoint();
        const auto [qubit, after] = fock::delta_channel(0.05, bops.phi, bsig);
        const double exact = fock::coherence_of_qubit(qubit);
        const double pert = 2.0 * 0.05 * std::abs((bops.phi * bsig).trace());
        CHECK(std::abs(exact - pert) < 10.0 * std::pow(0.05, 3));
        // and the residual scales as lambda^3 under halving
        const auto [qubit2, after2] = fock::delta_channel(0.025, bops.phi, bsig);
        const double exact2 = fock::coherence_of_qubit(qubit2);
        const double pert2 = 2.0 * 0.025 * std::abs((bops.phi * bsig).trace());
        const double ratio =
            std::abs(exact - pert) / std::abs(exact2 - pert2);
        CHECK(ratio > 7.0);
        CHECK(ratio < 9.0);
    }

    SUBCASE("channel output is a valid state") {
        const auto [qubit, after] = fock::delta_channel(0.2, ops.phi, sigma);
        qubit.validate();
        CHECK((after - after.adjoint()).norm() < 1e-12);
        CHECK(std::abs(after.trace().real() - 1.0) < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(after);
        CHECK(es.eigenvalues().minCoeff() > -1e-12);
    }

    SUBCASE("non-Hermitian coupling rejected") {
        Eigen::MatrixXcd bad = ops.phi;
        bad(0, 1) += Complex(0.0, 0.5);
        CHECK_THROWS_AS(fock::delta_channel(0.1, bad, sigma),
                        std::invalid_argument);
    }
}

TEST_CASE("qubit coherence measure") {
    fock::QubitState diag;
    diag.rho << 0.25, 0.0, 0.0, 0.75;
    CHECK(fock::coherence_of_qubit(diag) == 0.0);

    fock::QubitState max;
    max.rho << 0.5, 0.5, 0.5, 0.5;
    CHECK(fock::coherence_of_qubit(max) == doctest::Approx(1.0));

    fock::QubitState phase;
    phase.rho << 0.5, Complex(0.0, -0.2), Complex(0.0, 0.2), 0.5;
    CHECK(fock::coherence_of_qubit(phase) == doctest::Approx(0.4));
}

TEST_CASE("catalysis is exact for the instantaneous channel") {
    const auto cfg = hermitian_config(0.2, 1.0, 0.1);
    const auto series = fock::catalysis_check(cfg, 5);
    CHECK(series.size() == 5);
    CHECK(series[0] > 0.0);
    for (const double c : series)
        CHECK(std::abs(c - series[0]) < 1e-12);

    // truncation convergence: doubling N leaves the value unchanged
    const auto c32 = fock::catalysis_check(hermitian_config(0.2, 1.0, 0.1, 32), 1);
    const auto c64 = fock::catalysis_check(hermitian_config(0.2, 1.0, 0.1, 64), 1);
    CHECK(std::abs(c32[0] - c64[0]) < 1e-10);
}

TEST_CASE("instantaneous energy cost") {
    // dual-path agreement and positivity are asserted inside the call
    const double cost = fock::delta_energy_cost(hermitian_config(0.3, 1.0, 0.1));
    CHECK(cost > 0.0);

    // vacuum field: dE = Omega tr(sin^2 |0><0|) + omega g^2 lambda^2 exactly
    auto vac = hermitian_config(0.3, 0.0, 0.1);
    vac.mode_frequency = 1.0;
    const double vac_cost = fock::delta_energy_cost(vac);
    CHECK(vac_cost > 0.0);

    // zero coupling costs nothing
    auto free = hermitian_config(0.3, 1.0, 0.1);
    free.coupling = 0.0;
    CHECK(fock::delta_energy_cost(free) == 0.0);
}

TEST_CASE("perturbative field update recursion") {
    fock::FockOracleConfig cfg;
    cfg.truncation = 48;
    cfg.amp_annihilate = {0.3, 0.0};
    cfg.amp_create = {0.1, 0.0};
    cfg.coherent_alpha = {1.0, 0.0};
    cfg.coupling = 0.01;

    const auto series = fock::perturbative_update(cfg, 10);
    CHECK(series.size() == 10);
    const double expected_ratio = 1.0 + 0.5 * 1e-4 * (0.09 - 0.01);
    CHECK(series[1] / series[0] ==
          doctest::Approx(expected_ratio).epsilon(1e-10));

    // matches the stripped-units recursion series
    const double comm = 0.09 - 0.01;
    const auto predicted = catalysis::repeated_harvest_series(
        series.front(), comm, cfg.coupling, 10);
    for (int k = 0; k < 10; ++k)
        CHECK(series[k] == doctest::Approx(predicted[k]).epsilon(1e-10));

    // balanced amplitudes: vanishing commutator, constant series
    cfg.amp_create = {0.0, 0.3}; // |q| == |p|
    const auto flat = fock::perturbative_update(cfg, 6);
    for (const double c : flat)
        CHECK(c == doctest::Approx(flat[0]).epsilon(1e-12));
}

TEST_CASE("config validation") {
    fock::FockOracleConfig cfg;
    cfg.truncation = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.mode_frequency = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.coupling = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(hermitian_config(0.2, 1.0, 0.1).hermitian());
    fock::FockOracleConfig nh;
    nh.amp_annihilate = {0.3, 0.0};
    nh.amp_create = {0.1, 0.0};
    CHECK_FALSE(nh.hermitian());
}
