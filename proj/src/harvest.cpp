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

#include "coharvest/harvest.hpp"

#include <cmath>
#include <complex>

#include "coharvest/specfun.hpp"

namespace coharvest::harvest {

namespace {

constexpr double kOmega = 1.0; // detector gap in internal units

// Gaussian-protocol parameters shared by every static closed form.
struct Params {
    int n;
    double En, Rn;   // effective scales
    double T;        // 0 for delta switching
    double a;        // radial Gaussian coefficient of the coherence integrand
    double b;        // pi Omega T^2 / 2
    double a_prime;  // pi (Rn^2 + T^2) / 2
    double sn;       // unit n-sphere area
};

Params make_params(Dimension dim, double E, const SwitchingProfile& sw, double R) {
    Params p;
    p.n = dim.n();
    p.T = sw.duration();
    p.En = E > 0 ? model::effective_scale(dim, E) : 0.0;
    p.Rn = model::effective_scale(dim, R);
    p.sn = specfun::unit_sphere_area(p.n);
    p.b = M_PI * kOmega * p.T * p.T / 2.0;
    p.a_prime = M_PI * (p.Rn * p.Rn + p.T * p.T) / 2.0;
    p.a = p.En > 0 ? 1.0 / (2.0 * M_PI * p.En * p.En) +
                         M_PI * (p.Rn * p.Rn + p.T * p.T) / 4.0
                   : 0.0;
    return p;
}

double Dfun(double p, double z) { return specfun::parabolic_cylinder_D(p, z).value; }

// Gauss-Kronrod scale hint for the s-space radial integrands below, which
// behave like s^m exp(-a s^4 + b s^2).
double radial_scale_hint(double a, double b, double order) {
    const double kpeak = (b + std::sqrt(b * b + 4.0 * a * std::max(order, 0.5))) /
                         (2.0 * a);
    return std::max(0.5, std::sqrt(kpeak));
}

// Radial mode integral Int_0^inf k^{power} F(k) |a(k)| X-combination dk,
// written in s-space (k = s^2) so the half-integer powers stay smooth.
// The X-combination selects cosh-like (even, r = 1) or sinh-like (odd,
// r = 0) parts through the phase of the complex bracket; we integrate the
// real and imaginary parts separately.
struct BracketIntegrals {
    std::complex<double> value; // Int k^power F(k) [a X(1+k) -/+ a* X(1-k)] dk
    bool converged = true;
};

enum class BracketSign { Minus, Plus }; // a X_+ - a* X_-  vs  a X_+ + a* X_-

BracketIntegrals bracket_integral(Dimension dim, const FieldConfig& field,
                                  const SwitchingProfile& sw, double R,
                                  double power, BracketSign sign,
                                  const QuadratureSpec& spec) {
    const Params p = make_params(dim, field.mean_energy, sw, R);
    const double s_hint = radial_scale_hint(p.a, p.b, power);

    auto component = [&](bool imaginary) {
        return [=, &field](double s) {
            const double k = s * s;
            if (k == 0.0) return 0.0;
            const std::complex<double> a =
                model::coherent_amplitude(dim, field, k);
            const double xp = model::switching_fourier(sw, kOmega + k);
            const double xm = model::switching_fourier(sw, kOmega - k);
            const std::complex<double> bracket =
                sign == BracketSign::Minus ? a * xp - std::conj(a) * xm
                                           : a * xp + std::conj(a) * xm;
            const double g =
                2.0 * std::pow(s, 2.0 * power + 1.0) *
                model::smearing_fourier(dim, R, k);
            return g * (imaginary ? bracket.imag() : bracket.real());
        };
    };

    BracketIntegrals out;
    const auto re = quad::integrate_semi_infinite(component(false), spec, s_hint);
    const auto im = quad::integrate_semi_infinite(component(true), spec, s_hint);
    out.value = {re.value, im.value};
    out.converged = re.converged && im.converged;
    return out;
}

} // namespace

double coherence_static_closed(Dimension dim, const FieldConfig& field,
                               const SwitchingProfile& switching, double R) {
    dim.require_closed_form();
    field.validate();
    if (R < 0) throw std::invalid_argument("coherence_static_closed: R must be >= 0");
    if (field.mean_energy == 0) return 0.0;

    const Params p = make_params(dim, field.mean_energy, switching, R);
    const int r = field.phase_r;
    const double n = p.n;

    double moment; // Int_0^inf k^{n-1/2} e^{-a k^2} sinh^{1-r}(b k) cosh^r(b k) dk
    if (p.b == 0.0) {
        if (r == 0) return 0.0; // sinh factor kills the instantaneous integrand
        moment = specfun::gamma(0.5 * n + 0.25) /
                 (2.0 * std::pow(p.a, 0.5 * n + 0.25));
    } else {
        const double z = p.b / std::sqrt(2.0 * p.a);
        const double pm = (r == 0) ? 1.0 : -1.0; // (-1)^r
        const double dterm = Dfun(-n - 0.5, -z) - pm * Dfun(-n - 0.5, z);
        moment = specfun::gamma(n + 0.5) /
                 (2.0 * std::pow(2.0 * p.a, 0.5 * n + 0.25)) *
                 std::exp(p.b * p.b / (8.0 * p.a)) * dterm;
    }

    const double pref =
        4.0 * p.sn / std::sqrt(2.0 * std::pow(2.0 * M_PI * M_PI * p.En, n)) *
        std::exp(-M_PI * kOmega * kOmega * p.T * p.T / 4.0);
    return pref * moment;
}

double coherence_static_quadrature(Dimension dim, const FieldConfig& field,
                                   const SwitchingProfile& switching, double R,
                                   const QuadratureSpec& spec) {
    field.validate();
    if (R < 0)
        throw std::invalid_argument("coherence_static_quadrature: R must be >= 0");
    if (field.mean_energy == 0) return 0.0;

    const double n = dim.n();
    const auto I = bracket_integral(dim, field, switching, R, n - 0.5,
                                    BracketSign::Minus, spec);
    if (!I.converged)
        throw std::runtime_error(
            "coherence_static_quadrature: radial quadrature did not converge");
    const double pref =
        2.0 * specfun::unit_sphere_area(dim.n()) /
        std::sqrt(2.0 * std::pow(2.0 * M_PI, n));
    return pref * std::abs(I.value);
}

double energy_cost_coherent(Dimension dim, const FieldConfig& field,
                            const SwitchingProfile& switching, double R) {
    const double C = coherence_static_closed(dim, field, switching, R);
    if (C == 0.0)
        throw std::domain_error(
            "energy_cost_coherent: undefined ratio, coherence vanishes at these "
            "parameters");

    const Params p = make_params(dim, field.mean_energy, switching, R);
    const int r = field.phase_r;
    const double n = p.n;

    double ratio_term = 0.0;
    if (p.b > 0.0) {
        const double z = p.b / std::sqrt(2.0 * p.a);
        const double pm = (r == 0) ? 1.0 : -1.0; // (-1)^r
        const double num = Dfun(-n - 1.5, -z) + pm * Dfun(-n - 1.5, z);
        const double den = Dfun(-n - 0.5, -z) - pm * Dfun(-n - 0.5, z);
        ratio_term = -(n + 0.5) / std::sqrt(2.0 * p.a) * num / den;
    }
    return C * C / 4.0 * (kOmega + ratio_term);
}

double energy_cost_coherent_quadrature(Dimension dim, const FieldConfig& field,
                                       const SwitchingProfile& switching, double R,
                                       const QuadratureSpec& spec) {
    field.validate();
    if (field.mean_energy == 0)
        throw std::domain_error(
            "energy_cost_coherent_quadrature: undefined ratio for E = 0");
    const double n = dim.n();
    const auto den = bracket_integral(dim, field, switching, R, n - 0.5,
                                      BracketSign::Minus, spec);
    const auto num = bracket_integral(dim, field, switching, R, n + 0.5,
                                      BracketSign::Plus, spec);
    if (std::abs(den.value) == 0.0)
        throw std::domain_error(
            "energy_cost_coherent_quadrature: undefined ratio, coherence vanishes");
    const double pref = 2.0 * specfun::unit_sphere_area(dim.n()) /
                        std::sqrt(2.0 * std::pow(2.0 * M_PI, n));
    const double C = pref * std::abs(den.value);
    const double ratio = std::real(num.value / den.value);
    return C * C / 4.0 * (kOmega + ratio);
}

double energy_cost_vacuum(Dimension dim, const SwitchingProfile& switching,
                          double R) {
    dim.require_closed_form();
    if (R < 0) throw std::invalid_argument("energy_cost_vacuum: R must be >= 0");
    const Params p = make_params(dim, 1.0, switching, R);
    if (p.a_prime == 0.0)
        throw std::domain_error(
            "energy_cost_vacuum: diverges for a pointlike detector with "
            "instantaneous switching (R = 0 and T = 0)");

    const double n = p.n;
    const double w = 2.0 * p.b / std::sqrt(2.0 * p.a_prime);
    const double pref =
        p.sn * specfun::gamma(n + 1.0) /
        (2.0 * std::pow(2.0 * M_PI, n) * std::pow(2.0 * p.a_prime, 0.5 * (n + 1.0)));
    // The exponent b^2/(2 a') pairs with the D argument 2b/sqrt(2 a')
    // (DLMF 12.5.1 applied to the integrals with linear term 2 b k).
    const double expo = std::exp(-M_PI * kOmega * kOmega * p.T * p.T / 2.0 +
                                 p.b * p.b / (2.0 * p.a_prime));
    return pref * expo *
           ((n + 1.0) / std::sqrt(2.0 * p.a_prime) * Dfun(-n - 2.0, w) +
            kOmega * Dfun(-n - 1.0, w));
}

double energy_cost_vacuum_quadrature(Dimension dim,
                                     const SwitchingProfile& switching, double R,
                                     const QuadratureSpec& spec) {
    if (R < 0)
        throw std::invalid_argument("energy_cost_vacuum_quadrature: R must be >= 0");
    const Params p = make_params(dim, 1.0, switching, R);
    if (p.a_prime == 0.0)
        throw std::domain_error(
            "energy_cost_vacuum_quadrature: divergent for R = 0 with delta switching");
    const double n = p.n;

    auto integrand = [&](double k) {
        const double F = model::smearing_fourier(dim, R, k);
        const double xp = model::switching_fourier(switching, kOmega + k);
        return (std::pow(k, n + 1.0) + kOmega * std::pow(k, n)) * F * F * xp * xp;
    };
    const double hint = std::max(0.5, 1.0 / std::sqrt(p.a_prime));
    const auto I = quad::integrate_semi_infinite(integrand, spec, hint);
    if (!I.converged)
        throw std::runtime_error(
            "energy_cost_vacuum_quadrature: radial quadrature did not converge");
    return p.sn / (2.0 * std::pow(2.0 * M_PI, n)) * I.value;
}

double commutator_term(Dimension dim, const SwitchingProfile& switching, double R) {
    dim.require_closed_form();
    if (R < 0) throw std::invalid_argument("commutator_term: R must be >= 0");
    if (switching.is_delta()) return 0.0; // [Phi, Phi^dagger] vanishes exactly

    const Params p = make_params(dim, 1.0, switching, R);
    const double n = p.n;
    const double w = 2.0 * p.b / std::sqrt(2.0 * p.a_prime);
    const double pref =
        p.sn * specfun::gamma(n + 1.0) /
        (2.0 * std::pow(2.0 * M_PI, n) * std::pow(2.0 * p.a_prime, 0.5 * (n + 1.0)));
    const double expo = std::exp(-M_PI * kOmega * kOmega * p.T * p.T / 2.0 +
                                 p.b * p.b / (2.0 * p.a_prime));
    return -pref * expo * (Dfun(-n - 1.0, -w) - Dfun(-n - 1.0, w));
}

double commutator_term_quadrature(Dimension dim, const SwitchingProfile& switching,
                                  double R, const QuadratureSpec& spec) {
    if (R < 0)
        throw std::invalid_argument("commutator_term_quadrature: R must be >= 0");
    if (switching.is_delta()) return 0.0;
    const Params p = make_params(dim, 1.0, switching, R);
    const double n = p.n;

    auto integrand = [&](double k) {
        const double F = model::smearing_fourier(dim, R, k);
        const double xp = model::switching_fourier(switching, kOmega + k);
        const double xm = model::switching_fourier(switching, kOmega - k);
        return std::pow(k, n) * F * F * (xp * xp - xm * xm);
    };
    const double hint = std::max(0.5, 1.0 / std::sqrt(p.a_prime));
    const auto I = quad::integrate_semi_infinite(integrand, spec, hint);
    if (!I.converged)
        throw std::runtime_error(
            "commutator_term_quadrature: radial quadrature did not converge");
    return p.sn / (2.0 * std::pow(2.0 * M_PI, n)) * I.value;
}

double coherence_upper_bound(Dimension dim, const FieldConfig& field, double R,
                             double velocity, const QuadratureSpec& spec) {
    field.validate();
    if (velocity < 0 || velocity >= 1)
        throw std::invalid_argument("coherence_upper_bound: velocity must be in [0,1)");
    if (field.mean_energy == 0) return 0.0;

    const int n = dim.n();
    const double nd = n;
    const double gamma_v = 1.0 / std::sqrt(1.0 - velocity * velocity);
    const double sn = specfun::unit_sphere_area(n);

    // Angular factor Int dk_hat D(mu) F(k D(mu)), D(mu) = gamma (1 - v mu).
    auto angular = [&](double k) {
        if (velocity == 0.0) return sn * model::smearing_fourier(dim, R, k);
        if (n == 1) {
            double tot = 0.0;
            for (const double mu : {-1.0, 1.0}) {
                const double D = gamma_v * (1.0 - velocity * mu);
                tot += D * model::smearing_fourier(dim, R, k * D);
            }
            return tot;
        }
        QuadratureSpec inner = spec;
        inner.abs_tol = std::max(spec.abs_tol * 0.01, 1e-15);
        inner.rel_tol = std::max(spec.rel_tol * 0.01, 1e-13);
        const auto I = quad::integrate_polar(
            [&](double mu) {
                const double D = gamma_v * (1.0 - velocity * mu);
                return D * model::smearing_fourier(dim, R, k * D);
            },
            inner);
        return 2.0 * M_PI * I.value;
    };

    const Params p = make_params(dim, field.mean_energy, SwitchingProfile::delta(), R);
    auto integrand = [&](double s) {
        const double k = s * s;
        if (k == 0.0) return 0.0;
        return 2.0 * std::pow(s, 2.0 * (nd - 0.5) + 1.0) *
               model::coherent_amplitude_modulus(dim, field, k) * angular(k);
    };
    const auto I = quad::integrate_semi_infinite(integrand, spec,
                                                 radial_scale_hint(p.a, 0.0, nd));
    if (!I.converged)
        throw std::runtime_error(
            "coherence_upper_bound: radial quadrature did not converge");
    return 4.0 / std::sqrt(2.0 * std::pow(2.0 * M_PI, nd)) * I.value;
}

HarvestResult evaluate(Dimension dim, const FieldConfig& field,
                       const SwitchingProfile& switching, double R, EvalPath path,
                       const QuadratureSpec& spec) {
    HarvestResult out;
    out.path = path;
    if (path == EvalPath::ClosedForm) {
        out.coherence = coherence_static_closed(dim, field, switching, R);
        out.delta_e_coh =
            out.coherence > 0 ? energy_cost_coherent(dim, field, switching, R) : 0.0;
        out.delta_e_vac = energy_cost_vacuum(dim, switching, R);
        out.commutator_term = commutator_term(dim, switching, R);
    } else {
        out.coherence = coherence_static_quadrature(dim, field, switching, R, spec);
        out.delta_e_coh =
            out.coherence > 0
                ? energy_cost_coherent_quadrature(dim, field, switching, R, spec)
                : 0.0;
        out.delta_e_vac = energy_cost_vacuum_quadrature(dim, switching, R, spec);
        out.commutator_term = commutator_term_quadrature(dim, switching, R, spec);
    }
    return out;
}

} // namespace coharvest::harvest
