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

#include "coharvest/motion.hpp"

#include <cmath>

#include "coharvest/specfun.hpp"

namespace coharvest::motion {

namespace {

constexpr double kOmega = 1.0;

void check_velocity(double v) {
    if (v < 0 || v > kMaxVelocity)
        throw std::invalid_argument("motion: velocity must be in [0, 0.999]");
}

double lorentz_gamma(double v) { return 1.0 / std::sqrt(1.0 - v * v); }

} // namespace

double doppler_energy(double energy, double velocity, double mu) {
    check_velocity(velocity);
    return energy * lorentz_gamma(velocity) * (1.0 - velocity * mu);
}

double coherence_moving(Dimension dim, const FieldConfig& field,
                        const SwitchingProfile& switching, double R,
                        double velocity, const QuadratureSpec& spec) {
    check_velocity(velocity);
    field.validate();
    if (field.mean_energy == 0) return 0.0;
    if (velocity == 0.0)
        return harvest::coherence_static_closed(dim, field, switching, R);

    auto static_at = [&](double mu) {
        FieldConfig shifted = field;
        shifted.mean_energy = doppler_energy(field.mean_energy, velocity, mu);
        return harvest::coherence_static_closed(dim, shifted, switching, R);
    };

    if (dim.n() == 1) {
        // Exact two-point mixture: the 0-sphere has two directions.
        return 0.5 * (static_at(-1.0) + static_at(1.0));
    }

    const double g = lorentz_gamma(velocity);
    const auto I = quad::integrate_polar(
        [&](double mu) { return static_at(mu) / (g * (1.0 - velocity * mu)); },
        spec);
    if (!I.converged)
        throw std::runtime_error("coherence_moving: polar quadrature did not converge");
    return 0.5 * I.value;
}

std::complex<double> doppler_mixed_amplitude(Dimension dim, const FieldConfig& field,
                                             double velocity, double k,
                                             const QuadratureSpec& spec) {
    check_velocity(velocity);
    field.validate();
    if (k < 0) throw std::invalid_argument("doppler_mixed_amplitude: k must be >= 0");
    const double g = lorentz_gamma(velocity);
    const double n = dim.n();
    const double sn = specfun::unit_sphere_area(dim.n());

    // The mixture has the constant phase of the unboosted amplitude; mix the
    // modulus and reattach the phase.
    auto modulus_at = [&](double mu) {
        const double D = g * (1.0 - velocity * mu);
        return model::coherent_amplitude_modulus(dim, field, k / D) /
               std::pow(D, n - 0.5);
    };

    double mixed;
    if (dim.n() == 1) {
        mixed = (modulus_at(-1.0) + modulus_at(1.0)) / sn;
    } else {
        const auto I = quad::integrate_polar(modulus_at, spec);
        if (!I.converged)
            throw std::runtime_error(
                "doppler_mixed_amplitude: polar quadrature did not converge");
        mixed = 2.0 * M_PI * I.value / sn;
    }
    return field.phase_r == 0 ? std::complex<double>(mixed, 0.0)
                              : std::complex<double>(0.0, mixed);
}

double coherence_moving_mixed_quadrature(Dimension dim, const FieldConfig& field,
                                         const SwitchingProfile& switching,
                                         double R, double velocity,
                                         const QuadratureSpec& spec) {
    check_velocity(velocity);
    field.validate();
    if (field.mean_energy == 0) return 0.0;
    const double n = dim.n();
    const double sn = specfun::unit_sphere_area(dim.n());

    QuadratureSpec inner = spec;
    inner.abs_tol = std::max(spec.abs_tol * 1e-3, 1e-15);
    inner.rel_tol = std::max(spec.rel_tol * 1e-3, 1e-13);

    // The bracket [a_v X(1+k) - a_v* X(1-k)] is purely real for r = 0 and
    // purely imaginary for r = 1 because the mixed amplitude keeps the
    // constant phase; a single real radial integral per component suffices.
    auto component = [&](bool imaginary) {
        return [&, imaginary](double s) {
            const double k = s * s;
            if (k == 0.0) return 0.0;
            const std::complex<double> av =
                doppler_mixed_amplitude(dim, field, velocity, k, inner);
            const double xp = model::switching_fourier(switching, kOmega + k);
            const double xm = model::switching_fourier(switching, kOmega - k);
            const std::complex<double> bracket = av * xp - std::conj(av) * xm;
            const double g = 2.0 * std::pow(s, 2.0 * (n - 0.5) + 1.0) *
                             model::smearing_fourier(dim, R, k);
            return g * (imaginary ? bracket.imag() : bracket.real());
        };
    };

    const auto re = quad::integrate_semi_infinite(component(false), spec, 1.0);
    const auto im = quad::integrate_semi_infinite(component(true), spec, 1.0);
    if (!re.converged || !im.converged)
        throw std::runtime_error(
            "coherence_moving_mixed_quadrature: radial quadrature did not converge");
    return 2.0 * sn / std::sqrt(2.0 * std::pow(2.0 * M_PI, n)) *
           std::hypot(re.value, im.value);
}

double coherence_moving_boost_quadrature(Dimension dim, const FieldConfig& field,
                                         const SwitchingProfile& switching,
                                         double R, double velocity,
                                         const QuadratureSpec& spec) {
    check_velocity(velocity);
    field.validate();
    if (field.mean_energy == 0) return 0.0;
    const double n = dim.n();
    const double g = lorentz_gamma(velocity);

    QuadratureSpec inner = spec;
    inner.abs_tol = std::max(spec.abs_tol * 1e-3, 1e-15);
    inner.rel_tol = std::max(spec.rel_tol * 1e-3, 1e-13);

    // Angular part of the boosted integrand at fixed |k|; kappa = k gamma
    // (1 - v mu) is the mode frequency in the detector frame.
    auto angular = [&](double k, bool imaginary) {
        const std::complex<double> a = model::coherent_amplitude(dim, field, k);
        auto term = [&](double mu) {
            const double kappa = k * g * (1.0 - velocity * mu);
            const double xp = model::switching_fourier(switching, kOmega + kappa);
            const double xm = model::switching_fourier(switching, kOmega - kappa);
            const std::complex<double> bracket = a * xp - std::conj(a) * xm;
            const double w = kappa * model::smearing_fourier(dim, R, kappa);
            return w * (imaginary ? bracket.imag() : bracket.real());
        };
        if (dim.n() == 1) return term(-1.0) + term(1.0);
        const auto I = quad::integrate_polar(term, inner);
        return 2.0 * M_PI * I.value;
    };

    auto component = [&](bool imaginary) {
        return [&, imaginary](double s) {
            const double k = s * s;
            if (k == 0.0) return 0.0;
            // measure k^{n-1} dk and photon norm 1/sqrt(k), in s-space
            return 2.0 * std::pow(s, 2.0 * (n - 1.5) + 1.0) *
                   angular(k, imaginary);
        };
    };

    const auto re = quad::integrate_semi_infinite(component(false), spec, 1.0);
    const auto im = quad::integrate_semi_infinite(component(true), spec, 1.0);
    if (!re.converged || !im.converged)
        throw std::runtime_error(
            "coherence_moving_boost_quadrature: radial quadrature did not converge");
    return 2.0 / std::sqrt(2.0 * std::pow(2.0 * M_PI, n)) *
           std::hypot(re.value, im.value);
}

std::vector<MotionSweepPoint> swelling_scan(Dimension dim,
                                            const std::vector<double>& energies,
                                            const std::vector<double>& durations,
                                            int phase_r, double R, double velocity) {
    if (energies.empty() || durations.empty())
        throw std::invalid_argument("swelling_scan: grids must be non-empty");
    check_velocity(velocity);

    std::vector<MotionSweepPoint> out;
    out.reserve(energies.size() * durations.size());
    for (const double E : energies) {
        for (const double T : durations) {
            FieldConfig field{E, phase_r};
            const auto sw = SwitchingProfile::from_duration(T);
            MotionSweepPoint pt;
            pt.velocity = velocity;
            pt.energy = E;
            pt.duration = T;
            pt.coherence_static =
                harvest::coherence_static_closed(dim, field, sw, R);
            pt.coherence_moving = coherence_moving(dim, field, sw, R, velocity);
            if (pt.coherence_static > 0) {
                pt.swelling_ratio = pt.coherence_moving / pt.coherence_static;
                pt.swelling_defined = true;
            }
            out.push_back(pt);
        }
    }
    return out;
}

} // namespace coharvest::motion
