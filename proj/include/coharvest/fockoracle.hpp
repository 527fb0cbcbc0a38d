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

#ifndef COHARVEST_FOCKORACLE_HPP
#define COHARVEST_FOCKORACLE_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace coharvest::fock {

// Exact nonperturbative oracle on a truncated single-mode Fock space.
// The field operator is Phi = p a + q a^dagger with H = omega a^dagger a;
// the Hermitian case p = q* realizes the instantaneous-coupling channel
// U = I (x) cos(lambda Phi) - i sigma_x (x) sin(lambda Phi) exactly.
// The detector gap is Omega = 1 (project unit convention).

struct FockOracleConfig {
    int truncation = 48;                       // Fock levels 0 .. N-1
    double mode_frequency = 1.0;               // omega > 0
    std::complex<double> amp_annihilate{0.2, 0.0}; // p
    std::complex<double> amp_create{0.2, 0.0};     // q
    std::complex<double> coherent_alpha{1.0, 0.0};
    double coupling = 0.1;                     // lambda > 0

    void validate() const;
    bool hermitian() const;
    /// True when |alpha|^2 > N/4 (truncation-safety heuristic).
    bool truncation_warning() const;
};

/// 2x2 detector density matrix in the {|g>, |e>} basis.
struct QubitState {
    Eigen::Matrix2cd rho;
    /// Checks Hermiticity, unit trace (1e-12) and positivity (-1e-12).
    void validate() const;
};

/// N x N field density matrix in the Fock basis.
using FieldState = Eigen::MatrixXcd;

struct FieldOperators {
    Eigen::MatrixXcd phi;
    Eigen::MatrixXcd hamiltonian;
    Eigen::VectorXcd coherent_state;
    double truncation_leakage = 0.0; // coherent tail mass beyond level N-1
};

/// Builds a (matrix elements sqrt(k+1) on the superdiagonal), Phi, H and the
/// renormalized truncated coherent state.  Throws when the discarded
/// coherent tail mass exceeds 1e-10.
FieldOperators build_operators(const FockOracleConfig& config);

/// One application of the instantaneous-coupling channel to field state
/// sigma with a fresh ground-state qubit; Phi must be Hermitian.
/// Returns the post-interaction qubit and field states.
std::pair<QubitState, FieldState> delta_channel(double lambda,
                                                const Eigen::MatrixXcd& phi,
                                                const FieldState& sigma);

/// l1-norm of coherence of a qubit: 2 |rho_eg|.
double coherence_of_qubit(const QubitState& rho);

/// Applies delta_channel m times, each to the post-harvest field state; the
/// m harvested coherences are identical up to floating arithmetic and
/// truncation (checked to 1e-12 plus leakage; violation throws).
std::vector<double> catalysis_check(const FockOracleConfig& config, int repetitions);

/// Energy cost of one instantaneous harvest, computed two ways: directly
/// from the state changes, and through the closed form
/// Omega tr(sin^2(lambda Phi) sigma) + c^2 lambda^2 / 2 with c^2 = 2 omega
/// |p|^2.  The two must agree within truncation tolerance and be positive;
/// returns the direct value.
double delta_energy_cost(const FockOracleConfig& config);

/// Iterates the second-order field update
/// sigma <- sigma + lambda^2 (Phi^+ sigma Phi - 1/2 {Phi Phi^+, sigma})
/// for general (p, q), returning the coherence series 2 lambda |tr(Phi
/// sigma^(k))|.  The per-step ratio equals |1 + (lambda^2/2)(|p|^2 - |q|^2)|
/// up to truncation-edge effects (checked; violation throws).
std::vector<double> perturbative_update(const FockOracleConfig& config, int steps);

} // namespace coharvest::fock

#endif
