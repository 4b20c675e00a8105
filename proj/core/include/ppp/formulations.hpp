#pragma once

#include "ppp/grid.hpp"
#include "ppp/instance.hpp"
#include "ppp/linear_model.hpp"

namespace ppp {

/// Integer program for the general protection placement problem. The
/// connectivity requirement on the augmented graph is written as a rooted
/// spanning tree existence condition over arc variables f with
/// Miller-Tucker-Zemlin node labels u; protected lines and assigned
/// protected injections enable grid arcs, PMU coverage enables reference
/// arcs. Assignment variables w exist only for (line, endpoint) pairs;
/// the rest are zero by omission. All of x, y, z, w, f are binary, u is
/// integer in [0, |V|].
LinearModel build_mtz_full(const Grid& grid, const MeasurementConfig& config);

/// The same model with x, y, w and u relaxed to continuous [0,1] (resp.
/// [0,|V|]). Only z and f stay binary; optima coincide with the full
/// integer model.
LinearModel build_mtz_mixed(const Grid& grid, const MeasurementConfig& config);

/// Domination-style model for the no-line-flow special case: every bus is
/// covered by a protected PMU zone or by an assigned protected injection,
/// and at least one PMU is protected. Requires M^L empty and a connected
/// grid (throws PreconditionError otherwise).
LinearModel build_domination(const Grid& grid, const MeasurementConfig& config);

/// Domination model with x and w relaxed to continuous [0,1].
LinearModel build_domination_mixed(const Grid& grid,
                                   const MeasurementConfig& config);

}  // namespace ppp
