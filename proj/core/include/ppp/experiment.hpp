#pragma once

#include <cstdint>
#include <random>

#include "ppp/grid.hpp"
#include "ppp/instance.hpp"

namespace ppp {

/// Parameters of the randomized study setup: every bus gets a measured
/// injection and an eligible PMU, every line a measured flow (when
/// enabled); a sampled fraction of buses is zero-injection (cost 0), other
/// costs are uniform integers, and each PMU costs a fixed fraction of the
/// summed incident line costs, rounded up.
struct ExperimentProfile {
  Rational zero_injection_fraction{1, 10};
  Cost cost_low = 1;
  Cost cost_high = 100;
  Rational pmu_cost_factor{4, 5};
  bool line_flows_enabled = true;
  std::uint64_t rng_seed = 0;
};

/// Deterministic for a fixed profile. Line costs are drawn before M^L is
/// decided, so toggling line_flows_enabled changes the measured set but
/// never any cost value, and PMU costs stay comparable across the two
/// study variants.
MeasurementConfig generate_experiment(const Grid& grid,
                                      const ExperimentProfile& profile);

/// Unbiased integer in [0, bound) from an mt19937_64 stream. Hand-rolled
/// so generated instances are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace ppp
