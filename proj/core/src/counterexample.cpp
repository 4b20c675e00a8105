#include "ppp/counterexample.hpp"

#include <algorithm>
#include <functional>

#include "ppp/errors.hpp"
#include "ppp/observability.hpp"
#include "ppp/rank_check.hpp"

namespace ppp {

namespace {

/// Kuhn's augmenting-path matching, returns true when every left node is
/// matched.
bool saturating_matching(const std::vector<std::vector<int>>& can_cover,
                         int right_count) {
  std::vector<int> match_right(right_count, -1);
  std::vector<char> visited;
  std::function<bool(int)> try_left = [&](int l) -> bool {
    for (int r : can_cover[l]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || try_left(match_right[r])) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < static_cast<int>(can_cover.size()); ++l) {
    visited.assign(right_count, 0);
    if (!try_left(l)) return false;
  }
  return true;
}

}  // namespace

bool naive_line_domination(const Grid& grid, const ProtectionPlan& plan) {
  auto covered = pmu_coverage(grid, plan.protected_pmus);
  std::vector<int> needy;
  for (int i = 0; i < grid.bus_count(); ++i) {
    if (!std::binary_search(covered.begin(), covered.end(), i)) {
      needy.push_back(i);
    }
  }
  if (needy.empty()) return !plan.protected_pmus.empty();

  // Dominators: protected injections cover their closed neighborhood,
  // protected lines cover either endpoint; each dominates one bus.
  const int dominators = static_cast<int>(plan.protected_injections.size() +
                                          plan.protected_lines.size());
  std::vector<std::vector<int>> can_cover(needy.size());
  for (std::size_t l = 0; l < needy.size(); ++l) {
    int bus = needy[l];
    for (std::size_t d = 0; d < plan.protected_injections.size(); ++d) {
      int i = plan.protected_injections[d];
      if (i == bus || std::binary_search(grid.neighbors(i).begin(),
                                         grid.neighbors(i).end(), bus)) {
        can_cover[l].push_back(static_cast<int>(d));
      }
    }
    for (std::size_t d = 0; d < plan.protected_lines.size(); ++d) {
      auto [u, v] = grid.line(plan.protected_lines[d]);
      if (u == bus || v == bus) {
        can_cover[l].push_back(
            static_cast<int>(plan.protected_injections.size() + d));
      }
    }
  }
  return !plan.protected_pmus.empty() &&
         saturating_matching(can_cover, dominators);
}

CounterexampleInstance fig1_counterexample() {
  Grid grid({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}},
            {{0, Rational(1, 10)}, {1, Rational(1, 10)}, {2, Rational(1, 10)}});
  MeasurementConfig config;
  config.measured_injections = {grid.bus_index(4)};
  config.cost_injection = {{grid.bus_index(4), 1}};
  config.measured_lines = {2};  // the {3,4} line
  config.cost_line = {{2, 1}};
  config.pmu_buses = {grid.bus_index(1)};
  config.cost_pmu = {{grid.bus_index(1), 1}};

  ProtectionPlan plan;
  plan.protected_injections = config.measured_injections;
  plan.protected_lines = config.measured_lines;
  plan.protected_pmus = config.pmu_buses;

  // The instance is only useful if it actually separates the naive rule
  // from the real observability condition; check both on every build.
  if (!naive_line_domination(grid, plan)) {
    throw Error("counterexample: naive domination unexpectedly rejects");
  }
  if (is_topologically_observable(grid, plan)) {
    throw Error("counterexample: oracle unexpectedly accepts");
  }
  if (algebraic_rank_check(grid, plan, 7)) {
    throw Error("counterexample: rank check unexpectedly accepts");
  }
  return {std::move(grid), std::move(config), std::move(plan)};
}

}  // namespace ppp
