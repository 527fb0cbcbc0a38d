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

#ifndef COHARVEST_CATALYSIS_HPP
#define COHARVEST_CATALYSIS_HPP

#include <vector>

#include "coharvest/model.hpp"

namespace coharvest::catalysis {

using model::Dimension;

/// Summary of a repeated instantaneous-harvest run.
///
/// per_harvest_coherence is the absolute coherence extracted per harvest
/// (i.e. lambda-bar times the coupling-stripped value);
/// per_extraction_cost is reported stripped, in units Omega lambda-bar^2.
struct CatalysisReport {
    double per_harvest_coherence = 0.0;
    double per_extraction_cost = 0.0;
    long long harvests_for_unit_coherence = 0;
    double estimated_total_time_inv_omega = 0.0; // in units 1/Omega
    double estimated_total_time_seconds = 0.0;   // given a physical Omega
};

/// Per-harvest coherence (units lambda-bar) extracted by delta switching
/// from a phase r = 1 coherent field, for a detector with R = 1/Omega.
/// Closed form in both dimensions; for n = 3 below a small-velocity
/// threshold the 0/0 form is replaced by the polar-quadrature limit.
double catalytic_coherence(Dimension dim, double energy, double velocity);

/// Velocity threshold below which the n = 3 closed form is abandoned.
inline constexpr double kSmallVelocityThreshold = 1e-3;

/// Per-extraction energy cost in units Omega lambda-bar^2 (the coupling
/// cancels in these units; the lambda_bar argument is validated only).
/// Derived for R = 1/Omega, the standing assumption of the instantaneous
/// protocol; general radii go through harvest::energy_cost_vacuum.
double catalysis_energy_cost(Dimension dim, double energy, double velocity,
                             double lambda_bar);

/// Coherence series C^(1..m) under the repeated-harvest recursion
/// C^(k+1) = C^(k) |1 + (lambda-bar^2 / 2) commutator_term|, with
/// commutator_term in the stripped units of harvest::commutator_term.
std::vector<double> repeated_harvest_series(double first_coherence,
                                            double commutator_term,
                                            double lambda_bar, int m);

/// Time to harvest one unit of coherence by repetition: 1 / (lambda-bar
/// Omega), in seconds for a physical gap omega_hz.
double harvest_time_estimate(double lambda_bar, double omega_hz);

CatalysisReport make_report(Dimension dim, double energy, double velocity,
                            double lambda_bar, double omega_hz);

} // namespace coharvest::catalysis

#endif
