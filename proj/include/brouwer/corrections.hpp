#pragma once

#include "brouwer/constants.hpp"
#include "brouwer/jets.hpp"
#include "brouwer/tables.hpp"

namespace brouwer {

/// Periodic-correction maps between mean and osculating states. Corrections
/// are applied to the six polar-nodal functions of the Delaunay chart, which
/// stay regular for near-circular orbits; the bracket engine evaluates every
/// variable uniformly.

/// Direct map: mean state -> osculating polar-nodal state. Brackets are
/// evaluated at the mean state. order in {0, 1, 2}.
PolarNodalState mean_to_osculating(const DelaunayState& mean, int order,
                                   const PhysicalConstants& c,
                                   const TheoryGuards& guards = {},
                                   const CoefficientTables& tables = CoefficientTables::builtin());

/// Inverse map: osculating state -> mean Delaunay state. Brackets are
/// evaluated at the osculating state.
DelaunayState osculating_to_mean(const DelaunayState& osc, int order,
                                 const PhysicalConstants& c,
                                 const TheoryGuards& guards = {},
                                 const CoefficientTables& tables = CoefficientTables::builtin());

/// First-order periodic correction to the semi-major axis, closed series
/// (cross-check of the bracket path; the series includes the j = 2, i = 1
/// column the printed coefficient list omits).
double delta_a_first(const Chart<double>& ch, const PhysicalConstants& c);

/// Inverse second-order periodic correction to the semi-major axis,
/// closed series with table 5.
double delta_a_second_inverse(const Chart<double>& ch, const PhysicalConstants& c,
                              const CoefficientTables& tables = CoefficientTables::builtin());

/// The six polar-nodal functions (r, theta, nu, R, Theta, N) of the chart.
std::array<Jet2, 6> polar_nodal_jets(const Chart<Jet2>& ch, const PhysicalConstants& c);

}  // namespace brouwer
