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

#include "coharvest/catalysis.hpp"

#include <cmath>

#include "coharvest/motion.hpp"
#include "coharvest/specfun.hpp"

namespace coharvest::catalysis {

namespace {

constexpr double kOmega = 1.0;
constexpr double kProtocolRadius = 1.0; // R = 1/Omega, the protocol's assumption

void check_inputs(double energy, double velocity) {
    if (energy < 0) throw std::invalid_argument("catalysis: energy must be >= 0");
    if (velocity < 0 || velocity > motion::kMaxVelocity)
        throw std::invalid_argument("catalysis: velocity must be in [0, 0.999]");
}

} // namespace

double catalytic_coherence(Dimension dim, double energy, double velocity) {
    dim.require_closed_form();
    check_inputs(energy, velocity);
    if (energy == 0) return 0.0;

    const double g = 1.0 / std::sqrt(1.0 - velocity * velocity);
    const double Ep = energy * g * (1.0 + velocity);
    const double Em = energy * g * (1.0 - velocity);
    const double g34 = specfun::gamma(0.75);

    if (dim.n() == 1) {
        // Note the 1/2 inside the denominators: it descends from the static
        // Gaussian coefficient a = (1/(2 pi E^2))(1 + pi^2 E^2 (R^2+T^2)/2)
        // at T = 0, R = 1 and is fixed by the quadrature oracle.
        auto term = [&](double E) {
            return E / std::pow(1.0 + M_PI * M_PI * E * E / (2.0 * kOmega * kOmega),
                                0.75);
        };
        return 2.0 * g34 / std::pow(2.0 * M_PI, 0.25) * (term(Ep) + term(Em));
    }

    if (velocity < kSmallVelocityThreshold) {
        // The closed form below is 0/0 as v -> 0; take the angular-average
        // limit instead.
        model::FieldConfig field{energy, 1};
        return motion::coherence_moving(dim, field, model::SwitchingProfile::delta(),
                                        kProtocolRadius, velocity);
    }

    auto bracket = [&](double E) {
        return std::pow(1.0 + M_PI * M_PI * E * E / (32.0 * kOmega * kOmega), -0.75);
    };
    return 16.0 * g34 / (std::pow(2.0 * std::pow(M_PI, 9), 0.25) * g * velocity) *
           (bracket(Em) - bracket(Ep));
}

double catalysis_energy_cost(Dimension dim, double energy, double velocity,
                             double lambda_bar) {
    dim.require_closed_form();
    check_inputs(energy, velocity);
    if (!(lambda_bar > 0))
        throw std::invalid_argument("catalysis_energy_cost: lambda_bar must be > 0");

    const double g = 1.0 / std::sqrt(1.0 - velocity * velocity);
    const double C = catalytic_coherence(dim, energy, velocity);
    // Vacuum part at R = 1/Omega.  The 1+1 value is half the commonly
    // quoted one; it is pinned by energy_cost_vacuum's quadrature oracle.
    const double vac = dim.n() == 1
                           ? (1.0 + g / std::sqrt(2.0)) / (2.0 * M_PI * M_PI)
                           : 8.0 / std::pow(M_PI, 4) * (1.0 + 3.0 * g / std::sqrt(2.0));
    return C * C * kOmega / 4.0 + vac;
}

std::vector<double> repeated_harvest_series(double first_coherence,
                                            double commutator_term,
                                            double lambda_bar, int m) {
    if (m < 1) throw std::invalid_argument("repeated_harvest_series: m must be >= 1");
    std::vector<double> series(static_cast<std::size_t>(m));
    const double factor =
        std::abs(1.0 + lambda_bar * lambda_bar / 2.0 * commutator_term);
    series[0] = first_coherence;
    for (int k = 1; k < m; ++k) series[k] = series[k - 1] * factor;
    return series;
}

double harvest_time_estimate(double lambda_bar, double omega_hz) {
    if (!(lambda_bar > 0) || !(omega_hz > 0))
        throw std::invalid_argument(
            "harvest_time_estimate: lambda_bar and omega_hz must be > 0");
    return 1.0 / (lambda_bar * omega_hz);
}

CatalysisReport make_report(Dimension dim, double energy, double velocity,
                            double lambda_bar, double omega_hz) {
    if (!(lambda_bar > 0) || !(omega_hz > 0))
        throw std::invalid_argument("make_report: lambda_bar and omega_hz must be > 0");
    CatalysisReport rep;
    const double stripped = catalytic_coherence(dim, energy, velocity);
    rep.per_harvest_coherence = lambda_bar * stripped;
    rep.per_extraction_cost = catalysis_energy_cost(dim, energy, velocity, lambda_bar);
    if (rep.per_harvest_coherence > 0) {
        rep.harvests_for_unit_coherence =
            static_cast<long long>(std::ceil(1.0 / rep.per_harvest_coherence));
        // Each repetition cycles in about one detector period.
        rep.estimated_total_time_inv_omega =
            static_cast<double>(rep.harvests_for_unit_coherence);
        rep.estimated_total_time_seconds =
            rep.estimated_total_time_inv_omega / omega_hz;
    }
    return rep;
}

} // namespace coharvest::catalysis
