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

#ifndef COHARVEST_MOTION_HPP
#define COHARVEST_MOTION_HPP

#include <complex>
#include <vector>

#include "coharvest/harvest.hpp"

namespace coharvest::motion {

using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;
using quad::QuadratureSpec;

/// Velocities above this guard are rejected (the Lorentz factor diverges).
inline constexpr double kMaxVelocity = 0.999;

struct MotionSweepPoint {
    double velocity = 0.0;
    double energy = 0.0;
    double duration = 0.0;
    double coherence_static = 0.0;
    double coherence_moving = 0.0;
    double swelling_ratio = 0.0;
    bool swelling_defined = false; // false when coherence_static == 0
};

/// Doppler-shifted energy E gamma (1 - v mu) seen along direction cosine mu.
double doppler_energy(double energy, double velocity, double mu);

/// Harvested coherence (units lambda-bar) for a detector moving at constant
/// velocity: the angular average of the static closed form over
/// Doppler-shifted field energies.  In 1+1 dimensions the average is an
/// exact two-point sum; in 3+1 it is a polar quadrature with weight
/// 1/(gamma (1 - v mu)).
double coherence_moving(Dimension dim, const FieldConfig& field,
                        const SwitchingProfile& switching, double R,
                        double velocity, const QuadratureSpec& spec = {});

/// Doppler-mixed coherent amplitude a_v(k): the angular mixture of
/// amplitudes a(k / (gamma(1 - v mu))) with weight
/// [gamma (1 - v mu)]^{-(n - 1/2)} / s_n.  Oracle ingredient only.
std::complex<double> doppler_mixed_amplitude(Dimension dim,
                                             const FieldConfig& field,
                                             double velocity, double k,
                                             const QuadratureSpec& spec = {});

/// Oracle A: the static-detector mode integral evaluated with the
/// Doppler-mixed amplitude in place of a(k).
double coherence_moving_mixed_quadrature(Dimension dim, const FieldConfig& field,
                                         const SwitchingProfile& switching,
                                         double R, double velocity,
                                         const QuadratureSpec& spec = {});

/// Oracle B: direct quadrature of the boosted mode integral, with the
/// switching transform evaluated at the Doppler-shifted frequencies.
double coherence_moving_boost_quadrature(Dimension dim, const FieldConfig& field,
                                         const SwitchingProfile& switching,
                                         double R, double velocity,
                                         const QuadratureSpec& spec = {});

/// Tabulates static vs moving coherence over an (energy, duration) grid.
std::vector<MotionSweepPoint> swelling_scan(Dimension dim,
                                            const std::vector<double>& energies,
                                            const std::vector<double>& durations,
                                            int phase_r, double R, double velocity);

} // namespace coharvest::motion

#endif
