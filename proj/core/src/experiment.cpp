#include "ppp/experiment.hpp"

#include <algorithm>
#include <numeric>

#include "ppp/errors.hpp"

namespace ppp {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform_below: empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

MeasurementConfig generate_experiment(const Grid& grid,
                                      const ExperimentProfile& profile) {
  if (grid.bus_count() == 0) {
    throw PreconditionError("generate_experiment: empty grid");
  }
  if (profile.zero_injection_fraction < Rational(0) ||
      profile.zero_injection_fraction > Rational(1)) {
    throw PreconditionError("zero_injection_fraction must be in [0,1]");
  }
  if (profile.cost_low > profile.cost_high || profile.cost_low < 0) {
    throw PreconditionError("need 0 <= cost_low <= cost_high");
  }
  if (profile.pmu_cost_factor <= Rational(0)) {
    throw PreconditionError("pmu_cost_factor must be positive");
  }

  const int n = grid.bus_count();
  const int m = grid.line_count();
  std::mt19937_64 rng(profile.rng_seed);
  auto draw_cost = [&]() {
    std::uint64_t span =
        static_cast<std::uint64_t>(profile.cost_high - profile.cost_low) + 1;
    return profile.cost_low + static_cast<Cost>(uniform_below(rng, span));
  };

  // Zero-injection set: nearest-integer count, sampled without replacement.
  int n_zero = static_cast<int>(
      rational_round(profile.zero_injection_fraction * Rational(n)));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < n_zero; ++k) {
    int j = k + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - k)));
    std::swap(perm[k], perm[j]);
  }
  std::vector<char> is_zero(n, 0);
  for (int k = 0; k < n_zero; ++k) is_zero[perm[k]] = 1;

  MeasurementConfig config;
  config.measured_injections.resize(n);
  std::iota(config.measured_injections.begin(),
            config.measured_injections.end(), 0);
  config.pmu_buses = config.measured_injections;

  for (int i = 0; i < n; ++i) {
    config.cost_injection[i] = is_zero[i] ? 0 : draw_cost();
  }
  std::vector<Cost> line_cost(m);
  for (int e = 0; e < m; ++e) line_cost[e] = draw_cost();

  for (int k = 0; k < n; ++k) {
    Cost sum = 0;
    for (int e : grid.incident_lines(k)) sum += line_cost[e];
    config.cost_pmu[k] = rational_ceil(profile.pmu_cost_factor * Rational(sum));
  }

  if (profile.line_flows_enabled) {
    config.measured_lines.resize(m);
    std::iota(config.measured_lines.begin(), config.measured_lines.end(), 0);
    for (int e = 0; e < m; ++e) config.cost_line[e] = line_cost[e];
  }

  return config;
}

}  // namespace ppp
