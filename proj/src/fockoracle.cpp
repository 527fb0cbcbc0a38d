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

#include "coharvest/fockoracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace coharvest::fock {

namespace {

constexpr double kDetectorGap = 1.0; // Omega in internal units

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

struct TrigPair {
    Matrix cos, sin;
};

// cos(lambda Phi), sin(lambda Phi) by spectral decomposition of Hermitian Phi.
TrigPair trig_of(double lambda, const Matrix& phi) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(phi);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("fock: eigendecomposition failed");
    const auto& V = es.eigenvectors();
    const auto& ev = es.eigenvalues();
    Eigen::VectorXd c(ev.size()), s(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        c[i] = std::cos(lambda * ev[i]);
        s[i] = std::sin(lambda * ev[i]);
    }
    TrigPair t;
    t.cos = V * c.asDiagonal() * V.adjoint();
    t.sin = V * s.asDiagonal() * V.adjoint();
    return t;
}

void require_hermitian(const Matrix& phi) {
    const double scale = std::max(1.0, phi.norm());
    if ((phi - phi.adjoint()).norm() > 1e-12 * scale)
        throw std::invalid_argument("fock: Phi must be Hermitian (p = q*)");
}

} // namespace

void FockOracleConfig::validate() const {
    if (truncation < 8)
        throw std::invalid_argument("FockOracleConfig: truncation must be >= 8");
    if (!(mode_frequency > 0))
        throw std::invalid_argument("FockOracleConfig: mode_frequency must be > 0");
    if (coupling < 0)
        throw std::invalid_argument("FockOracleConfig: coupling must be >= 0");
}

bool FockOracleConfig::hermitian() const {
    return std::abs(amp_annihilate - std::conj(amp_create)) <= 1e-14;
}

bool FockOracleConfig::truncation_warning() const {
    return std::norm(coherent_alpha) > truncation / 4.0;
}

void QubitState::validate() const {
    if ((rho - rho.adjoint()).norm() > 1e-12)
        throw std::runtime_error("QubitState: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
        std::abs(rho.trace().imag()) > 1e-12)
        throw std::runtime_error("QubitState: trace != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-12)
        throw std::runtime_error("QubitState: negative eigenvalue");
}

FieldOperators build_operators(const FockOracleConfig& config) {
    config.validate();
    const int N = config.truncation;

    FieldOperators ops;
    Matrix a = Matrix::Zero(N, N);
    for (int k = 1; k < N; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    ops.phi = config.amp_annihilate * a + config.amp_create * a.adjoint();

    Eigen::VectorXd levels(N);
    for (int k = 0; k < N; ++k) levels[k] = config.mode_frequency * k;
    ops.hamiltonian = levels.cast<Complex>().asDiagonal();

    // Truncated coherent state: v_k proportional to alpha^k / sqrt(k!).
    Eigen::VectorXcd v(N);
    v[0] = 1.0;
    for (int k = 1; k < N; ++k)
        v[k] = v[k - 1] * config.coherent_alpha / std::sqrt(static_cast<double>(k));
    const double kept = std::exp(-std::norm(config.coherent_alpha)) * v.squaredNorm();
    ops.truncation_leakage = std::max(0.0, 1.0 - kept);
    if (ops.truncation_leakage > 1e-10) {
        std::ostringstream os;
        os << "fock: coherent-state tail mass " << ops.truncation_leakage
           << " beyond level " << N - 1 << " exceeds 1e-10; raise truncation";
        throw std::runtime_error(os.str());
    }
    ops.coherent_state = v / v.norm();
    return ops;
}

std::pair<QubitState, FieldState> delta_channel(double lambda, const Matrix& phi,
                                                const FieldState& sigma) {
    require_hermitian(phi);
    if (phi.rows() != sigma.rows() || phi.cols() != sigma.cols())
        throw std::invalid_argument("delta_channel: dimension mismatch");

    const TrigPair t = trig_of(lambda, phi);
    // sin(2 lambda Phi) = 2 sin cos in the common eigenbasis.
    const Matrix sin2 = 2.0 * (t.sin * t.cos);

    QubitState qubit;
    const Complex pg = (t.cos * sigma * t.cos).trace();
    const Complex pe = (t.sin * sigma * t.sin).trace();
    const Complex off = Complex(0, 0.5) * (sin2 * sigma).trace();
    qubit.rho << pg, off, std::conj(off), pe;

    FieldState after = t.cos * sigma * t.cos + t.sin * sigma * t.sin;
    return {qubit, std::move(after)};
}

double coherence_of_qubit(const QubitState& q) { return 2.0 * std::abs(q.rho(1, 0)); }

std::vector<double> catalysis_check(const FockOracleConfig& config, int repetitions) {
    if (repetitions < 1)
        throw std::invalid_argument("catalysis_check: repetitions must be >= 1");
    const FieldOperators ops = build_operators(config);
    require_hermitian(ops.phi);

    FieldState sigma = ops.coherent_state * ops.coherent_state.adjoint();
    const double trace0 = sigma.trace().real();

    std::vector<double> harvested;
    harvested.reserve(static_cast<std::size_t>(repetitions));
    for (int i = 0; i < repetitions; ++i) {
        auto [qubit, after] = delta_channel(config.coupling, ops.phi, sigma);
        harvested.push_back(coherence_of_qubit(qubit));
        sigma = std::move(after);
        const double drift = std::abs(sigma.trace().real() - trace0);
        if (drift > 1e-8) {
            std::ostringstream os;
            os << "catalysis_check: field trace drifted by " << drift
               << " after harvest " << i + 1 << " (truncation leakage)";
            throw std::runtime_error(os.str());
        }
    }

    const double tol = 1e-12 + 10.0 * ops.truncation_leakage;
    for (const double c : harvested)
        if (std::abs(c - harvested.front()) > tol) {
            std::ostringstream os;
            os << "catalysis_check: harvested coherence varies by "
               << std::abs(c - harvested.front()) << " (tolerance " << tol << ")";
            throw std::runtime_error(os.str());
        }
    return harvested;
}

double delta_energy_cost(const FockOracleConfig& config) {
    const FieldOperators ops = build_operators(config);
    require_hermitian(ops.phi);
    const double lambda = config.coupling;

    FieldState sigma = ops.coherent_state * ops.coherent_state.adjoint();
    auto [qubit, after] = delta_channel(lambda, ops.phi, sigma);

    // Direct: detector gain Omega rho_ee plus field energy change.
    const double detector = kDetectorGap * qubit.rho(1, 1).real();
    const double field = ((ops.hamiltonian * (after - sigma)).trace()).real();
    const double direct = detector + field;

    // Closed form: Omega tr(sin^2 sigma) + c^2 lambda^2 / 2, c^2 = 2 omega |p|^2.
    const TrigPair t = trig_of(lambda, ops.phi);
    const double sin2_exp = ((t.sin * sigma * t.sin).trace()).real();
    const double c2 =
        2.0 * config.mode_frequency * std::norm(config.amp_annihilate);
    const double closed = kDetectorGap * sin2_exp + c2 * lambda * lambda / 2.0;

    const double tol = 1e-9 * std::max(1.0, std::abs(closed)) +
                       100.0 * ops.truncation_leakage;
    if (std::abs(direct - closed) > tol) {
        std::ostringstream os;
        os << "delta_energy_cost: direct (" << direct << ") and closed (" << closed
           << ") evaluations disagree beyond " << tol;
        throw std::runtime_error(os.str());
    }
    if (config.coupling > 0 && !(direct > 0))
        throw std::runtime_error("delta_energy_cost: energy cost not positive");
    return config.coupling > 0 ? direct : 0.0;
}

std::vector<double> perturbative_update(const FockOracleConfig& config, int steps) {
    if (steps < 1)
        throw std::invalid_argument("perturbative_update: steps must be >= 1");
    const FieldOperators ops = build_operators(config);
    const double lambda = config.coupling;
    const Matrix& phi = ops.phi;
    const Matrix phid = phi.adjoint();
    const Matrix phiphid = phi * phid;

    FieldState sigma = ops.coherent_state * ops.coherent_state.adjoint();
    const double trace0 = sigma.trace().real();
    const double commutator =
        std::norm(config.amp_annihilate) - std::norm(config.amp_create);
    const double expected_ratio =
        std::abs(1.0 + lambda * lambda / 2.0 * commutator);
    const double l4 = std::pow(lambda, 4);

    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        series.push_back(2.0 * lambda * std::abs((phi * sigma).trace()));
        sigma += lambda * lambda *
                 (phid * sigma * phi -
                  0.5 * (phiphid * sigma + sigma * phiphid));
        const double drift = std::abs(sigma.trace().real() - trace0);
        if (drift > 100.0 * l4 + 1e-12) {
            std::ostringstream os;
            os << "perturbative_update: trace drifted by " << drift << " at step "
               << k + 1;
            throw std::runtime_error(os.str());
        }
    }

    for (std::size_t k = 1; k < series.size(); ++k) {
        if (series[k - 1] == 0.0) continue;
        const double ratio = series[k] / series[k - 1];
        const double tol = 10.0 * l4 + 100.0 * ops.truncation_leakage + 1e-14;
        if (std::abs(ratio - expected_ratio) > tol) {
            std::ostringstream os;
            os << "perturbative_update: step ratio " << ratio << " deviates from "
               << expected_ratio << " beyond " << tol;
            throw std::runtime_error(os.str());
        }
    }
    return series;
}

} // namespace coharvest::fock
