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

#ifndef COHARVEST_QUADRATURE_HPP
#define COHARVEST_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace coharvest::quad {

/// Tolerances and budget for one adaptive integration.
///
/// At least one of abs_tol / rel_tol must be strictly positive and
/// max_subdivisions must be >= 8; validate() enforces both.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    /// Tail panels of a semi-infinite integral whose magnitude falls below
    /// this threshold are truncated.
    double tail_cutoff_threshold = 1e-16;

    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

/// Thrown when the integrand produces a non-finite value; the offending
/// abscissa is reported in the message and kept as a field.
class IntegrandError : public std::runtime_error {
public:
    explicit IntegrandError(double abscissa);
    double abscissa;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
IntegralResult integrate_interval(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec = {});

/// Integral of f over (0, inf) for integrands that decay to zero.
///
/// The axis is seeded with geometrically growing panels starting at
/// scale_hint (callers that know the integrand's Gaussian width should pass
/// it); panels are appended until one contributes less than
/// tail_cutoff_threshold, then the whole panel set is refined adaptively.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec = {},
                                       double scale_hint = 1.0);

/// Integral of f over the polar interval [-1, 1].
IntegralResult integrate_polar(const std::function<double(double)>& f,
                               const QuadratureSpec& spec = {});

} // namespace coharvest::quad

#endif
