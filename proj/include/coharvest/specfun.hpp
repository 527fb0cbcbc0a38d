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

#ifndef COHARVEST_SPECFUN_HPP
#define COHARVEST_SPECFUN_HPP

namespace coharvest::specfun {

/// Value plus an absolute error estimate in the same units.
struct SpecFunResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
};

/// Parabolic cylinder function D_p(z) for negative order p < 0.
///
/// Evaluated through the integral representation (DLMF 12.5.1)
///
///     D_p(z) = e^{-z^2/4} / Gamma(-p) * Int_0^inf t^{-p-1} e^{-t^2/2 - z t} dt
///
/// which is valid for all p < 0, using adaptive quadrature after the
/// substitution t = s^2 that removes the endpoint singularity for
/// p in [-1, 0).  Accuracy target: 1e-10 absolute or 1e-9 relative,
/// whichever is looser.
///
/// Throws std::domain_error for p >= 0 or non-finite z, and
/// std::overflow_error when the integrand would exceed the representable
/// range (very negative z).
SpecFunResult parabolic_cylinder_D(double p, double z);

/// Surface area of the unit n-sphere, s_n = 2 pi^{n/2} / Gamma(n/2).
/// Throws std::domain_error for n < 1.
double unit_sphere_area(int n);

/// Euler gamma function; >= 12 significant digits on [0.25, 10].
/// Throws std::domain_error at the poles (nonpositive integers).
double gamma(double x);

} // namespace coharvest::specfun

#endif
