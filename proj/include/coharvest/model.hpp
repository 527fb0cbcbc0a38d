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

#ifndef COHARVEST_MODEL_HPP
#define COHARVEST_MODEL_HPP

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace coharvest::model {

// Unit convention used throughout: the detector gap Omega is 1, so energies
// are E/Omega, durations Omega*T, radii Omega*R, and velocities are in units
// of c.  Coherences carry one factor of the dimensionless coupling
// lambda-bar and energy costs carry Omega*lambda-bar^2; both are reported
// stripped of those factors.

/// Spatial dimension of the Minkowski background (n space dimensions).
/// Closed-form evaluation paths support n in {1, 3}; quadrature-only paths
/// accept any n >= 1.
class Dimension {
public:
    explicit Dimension(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Dimension: n must be >= 1");
    }
    int n() const { return n_; }
    bool closed_form_supported() const { return n_ == 1 || n_ == 3; }
    void require_closed_form() const;

private:
    int n_;
};

struct DetectorConfig {
    double omega = 1.0;      // energy gap, the unit of inverse time
    double mean_radius = 1.0;
    double velocity = 0.0;   // in [0, 1)
    double coupling = 1e-3;  // dimensionless lambda-bar

    /// True when the coupling is too large for the perturbative expansion
    /// to be trustworthy (flagged, not rejected).
    bool perturbative_warning() const { return coupling > 0.1; }
    void validate() const;
};

struct FieldConfig {
    double mean_energy = 1.0; // E in units of Omega
    int phase_r = 1;          // phase selector, 0 or 1

    void validate() const;
};

enum class SwitchingKind { Gaussian, Delta };

/// Interaction window: a Gaussian of mean duration T, or an instantaneous
/// delta switching (the exact T -> 0 limit).
struct SwitchingProfile {
    SwitchingKind kind = SwitchingKind::Gaussian;
    double mean_duration = 1.0; // ignored for Delta

    static SwitchingProfile gaussian(double mean_duration);
    static SwitchingProfile delta();
    /// Gaussian for T > 0, Delta for T == 0.
    static SwitchingProfile from_duration(double mean_duration);

    bool is_delta() const { return kind == SwitchingKind::Delta; }
    /// Effective duration: T for Gaussian, 0 for Delta.
    double duration() const { return is_delta() ? 0.0 : mean_duration; }
};

/// Dimension-dependent effective scale x_n = (s_{n+1} / (pi s_n)) x used by
/// the Gaussian smearing and amplitude profiles (x_1 = x, x_3 = x/2).
double effective_scale(Dimension dim, double x);

/// Fourier transform of the switching profile at the given argument:
/// exp(-pi arg^2 T^2 / 4) for a Gaussian, identically 1 for Delta.
/// Bounded by 1 in modulus for every argument.
double switching_fourier(const SwitchingProfile& profile, double argument);

/// Fourier transform of the Gaussian smearing profile,
/// F(k) = exp(-pi k^2 R_n^2 / 4); strictly positive.
double smearing_fourier(Dimension dim, double mean_radius, double k);

/// Coherent amplitude distribution with unit mean excitation number,
/// a(k) = exp(-k^2 / (2 pi E_n^2) + i pi r / 2) / (pi E_n)^{n/2}.
/// Throws std::domain_error when mean_energy == 0 (callers treat the
/// degenerate field as harvesting exactly zero coherence).
std::complex<double> coherent_amplitude(Dimension dim, const FieldConfig& field,
                                        double k);

/// Modulus of the coherent amplitude (the phase is the constant e^{i pi r/2}).
double coherent_amplitude_modulus(Dimension dim, const FieldConfig& field,
                                  double k);

/// Full run configuration assembled from a key=value file and/or flags.
struct RunConfig {
    int dimension = 1;
    FieldConfig field;
    DetectorConfig detector;
    SwitchingProfile switching = SwitchingProfile::gaussian(1.0);
};

/// Thrown by the config parser; carries the offending key and line number.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, const std::string& key, int line);
    std::string key;
    int line;
};

/// Parses key=value configuration text with keys: dimension, energy,
/// duration, radius, velocity, phase_r, coupling, switching_kind.
/// Blank lines and '#' comments ignored.  Errors name the key and line.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

} // namespace coharvest::model

#endif
