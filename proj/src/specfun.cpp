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

#include "coharvest/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "coharvest/quadrature.hpp"

namespace coharvest::specfun {

SpecFunResult parabolic_cylinder_D(double p, double z) {
    if (!(p < 0.0))
        throw std::domain_error("parabolic_cylinder_D: order p must be < 0");
    if (!std::isfinite(z))
        throw std::domain_error("parabolic_cylinder_D: argument z must be finite");
    // The integrand peaks at exp(z^2/2) for z < 0; refuse arguments for which
    // intermediates would overflow instead of silently saturating.
    if (z < -36.0)
        throw std::overflow_error(
            "parabolic_cylinder_D: intermediate exponentials exceed double range");

    // t = s^2 turns t^{-p-1} dt into 2 s^{-2p-1} ds, regular at s = 0 for
    // every p <= -1/2 and integrable throughout p < 0.  pow(0, 0) = 1 keeps
    // the correct endpoint limit at p = -1/2.
    auto integrand = [p, z](double s) {
        if (s < 0.0) return 0.0;
        const double t = s * s;
        return 2.0 * std::pow(s, -2.0 * p - 1.0) *
               std::exp(-0.5 * t * t - z * t);
    };

    // Peak of the t-space integrand: t* solves (-p-1)/t - t - z = 0.
    const double c = std::max(-p - 1.0, 0.25);
    const double t_star = 0.5 * (-z + std::sqrt(z * z + 4.0 * c));
    const double scale = std::max(0.5, std::sqrt(t_star));

    quad::QuadratureSpec qs;
    qs.abs_tol = 0.0;
    qs.rel_tol = 1e-12;
    qs.max_subdivisions = 4000;
    qs.tail_cutoff_threshold = 1e-300;

    const quad::IntegralResult I = quad::integrate_semi_infinite(integrand, qs, scale);

    const double pref = std::exp(-0.25 * z * z) / std::tgamma(-p);
    SpecFunResult r;
    r.value = pref * I.value;
    r.abs_error_estimate =
        pref * I.error_estimate + 4e-15 * std::abs(r.value);
    if (!std::isfinite(r.value))
        throw std::overflow_error("parabolic_cylinder_D: result not finite");
    return r;
}

double unit_sphere_area(int n) {
    if (n < 1) throw std::domain_error("unit_sphere_area: n must be >= 1");
    const double half_n = 0.5 * static_cast<double>(n);
    return 2.0 * std::pow(M_PI, half_n) / std::tgamma(half_n);
}

double gamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma: pole at nonpositive integer argument");
    return std::tgamma(x);
}

} // namespace coharvest::specfun
