#pragma once

#include "ppp/grid.hpp"
#include "ppp/instance.hpp"

namespace ppp {

/// The refuted "domination with line assignment" acceptance rule: every
/// bus must lie in a protected PMU zone, or be accounted for by a distinct
/// protected injection (itself or a neighbor) or a distinct protected line
/// (an endpoint). Decided by bipartite matching. This rule is NOT a valid
/// observability test; fig1_counterexample() is the witness.
bool naive_line_domination(const Grid& grid, const ProtectionPlan& plan);

struct CounterexampleInstance {
  Grid grid;
  MeasurementConfig config;
  ProtectionPlan plan;
};

/// A 4-bus path with a protected PMU at one end, a protected flow on the
/// far line and a protected injection at the far leaf. The leaf injection
/// measures exactly the protected line's flow, so the plan passes the
/// naive domination rule yet fails observability. Both properties are
/// re-verified on every call; an Error means the build is miswired.
CounterexampleInstance fig1_counterexample();

}  // namespace ppp
