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

#ifndef COHARVEST_HARVEST_HPP
#define COHARVEST_HARVEST_HPP

#include "coharvest/model.hpp"
#include "coharvest/quadrature.hpp"

namespace coharvest::harvest {

using model::Dimension;
using model::FieldConfig;
using model::SwitchingProfile;
using quad::QuadratureSpec;

enum class EvalPath { ClosedForm, Quadrature };

/// Static-detector harvest summary.  Units: coherence in lambda-bar,
/// energies in Omega lambda-bar^2, commutator_term dimensionless
/// (lambda^2 [Phi, Phi^dagger] / lambda-bar^2).
///
/// delta_e_coh is 0 when coherence is 0 (its exact limit); delta_e_coh +
/// delta_e_vac is positive for every delta-switching configuration and for
/// Gaussian switching with E well below the gap (the worst configuration
/// crosses zero near E = Omega/2), but goes negative at higher field
/// energies where the interaction de-excites the field faster than the
/// detector absorbs (the switching agent extracts the difference as work).
struct HarvestResult {
    double coherence = 0.0;
    double delta_e_coh = 0.0;
    double delta_e_vac = 0.0;
    double commutator_term = 0.0;
    EvalPath path = EvalPath::ClosedForm;
};

/// Harvested coherence C/lambda-bar for a static detector, closed form:
/// a parabolic-cylinder expression for Gaussian switching, the Gaussian
/// moment limit for delta switching (where r = 0 gives exactly 0).
/// E = 0 returns exactly 0.
double coherence_static_closed(Dimension dim, const FieldConfig& field,
                               const SwitchingProfile& switching, double R);

/// Same quantity by direct radial quadrature of the defining mode integral
/// (real and imaginary parts integrated separately).  Serves as the
/// independent oracle for the closed form.
double coherence_static_quadrature(Dimension dim, const FieldConfig& field,
                                   const SwitchingProfile& switching, double R,
                                   const QuadratureSpec& spec = {});

/// Harvesting part of the energy cost, Delta E_coh / (Omega lambda-bar^2),
/// closed form.  Requires nonzero coherence at these parameters; throws
/// std::domain_error otherwise (undefined ratio).
double energy_cost_coherent(Dimension dim, const FieldConfig& field,
                            const SwitchingProfile& switching, double R);

/// Quadrature oracle for energy_cost_coherent: evaluates
/// (C^2/4)(Omega + Re[<[Phi,H]>/<Phi>]) with both expectation values
/// computed by direct mode integrals.
double energy_cost_coherent_quadrature(Dimension dim, const FieldConfig& field,
                                       const SwitchingProfile& switching, double R,
                                       const QuadratureSpec& spec = {});

/// Field-state-independent vacuum cost Delta E_vac / (Omega lambda-bar^2),
/// closed form.  Requires R > 0 or Gaussian switching (the pointlike
/// instantaneous limit diverges).
double energy_cost_vacuum(Dimension dim, const SwitchingProfile& switching,
                          double R);

double energy_cost_vacuum_quadrature(Dimension dim,
                                     const SwitchingProfile& switching, double R,
                                     const QuadratureSpec& spec = {});

/// lambda^2 [Phi, Phi^dagger] / lambda-bar^2; exactly 0 for delta switching,
/// strictly negative otherwise.
double commutator_term(Dimension dim, const SwitchingProfile& switching, double R);

double commutator_term_quadrature(Dimension dim, const SwitchingProfile& switching,
                                  double R, const QuadratureSpec& spec = {});

/// Velocity-dependent upper bound on the harvested coherence (in units
/// lambda-bar), saturated by delta switching with phase r = 1 at v = 0.
double coherence_upper_bound(Dimension dim, const FieldConfig& field, double R,
                             double velocity, const QuadratureSpec& spec = {});

/// Evaluates all static-harvest outputs through one path.
HarvestResult evaluate(Dimension dim, const FieldConfig& field,
                       const SwitchingProfile& switching, double R, EvalPath path,
                       const QuadratureSpec& spec = {});

} // namespace coharvest::harvest

#endif
