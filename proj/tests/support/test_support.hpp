#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ppp/experiment.hpp"
#include "ppp/grid.hpp"
#include "ppp/instance.hpp"
#include "ppp/observability.hpp"

namespace ppp::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

/// Exact rank of an integer matrix over the rationals (fraction-free
/// Bareiss elimination). Independent of the library's finite-field path.
inline int bareiss_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  long long prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Random multigraph on 2..max_buses buses where every bus has at least
/// one incident line. May be disconnected; occasionally has parallels.
inline Grid random_graph(std::mt19937_64& rng, int max_buses) {
  int n = 2 + static_cast<int>(uniform_below(rng, max_buses - 1));
  std::vector<BusId> buses(n);
  for (int i = 0; i < n; ++i) buses[i] = i + 1;
  std::vector<std::pair<BusId, BusId>> lines;
  int m = n / 2 + static_cast<int>(uniform_below(rng, n + 3));
  for (int k = 0; k < m; ++k) {
    BusId a = 1 + static_cast<BusId>(uniform_below(rng, n));
    BusId b = 1 + static_cast<BusId>(uniform_below(rng, n));
    if (a != b) lines.emplace_back(a, b);
  }
  std::vector<int> degree(n, 0);
  for (auto [a, b] : lines) {
    ++degree[a - 1];
    ++degree[b - 1];
  }
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 0) {
      BusId other = 1 + static_cast<BusId>(uniform_below(rng, n - 1));
      if (other >= i + 1) ++other;
      lines.emplace_back(i + 1, other);
    }
  }
  return Grid(buses, lines);
}

inline Grid random_connected_graph(std::mt19937_64& rng, int n, int extra = -1) {
  std::vector<BusId> buses(n);
  for (int i = 0; i < n; ++i) buses[i] = i + 1;
  std::vector<std::pair<BusId, BusId>> lines;
  for (int i = 1; i < n; ++i) {
    BusId anchor = 1 + static_cast<BusId>(uniform_below(rng, i));
    lines.emplace_back(anchor, i + 1);
  }
  if (extra < 0) extra = static_cast<int>(uniform_below(rng, n));
  for (int k = 0; k < extra; ++k) {
    BusId a = 1 + static_cast<BusId>(uniform_below(rng, n));
    BusId b = 1 + static_cast<BusId>(uniform_below(rng, n));
    if (a != b) lines.emplace_back(a, b);
  }
  return Grid(buses, lines);
}

inline std::vector<int> random_subset(std::mt19937_64& rng, int universe,
                                      int percent_in) {
  std::vector<int> out;
  for (int v = 0; v < universe; ++v) {
    if (uniform_below(rng, 100) < static_cast<std::uint64_t>(percent_in)) {
      out.push_back(v);
    }
  }
  return out;
}

inline MeasurementConfig random_config(std::mt19937_64& rng, const Grid& grid,
                                       Cost max_cost = 9) {
  MeasurementConfig config;
  config.measured_injections = random_subset(rng, grid.bus_count(), 60);
  config.measured_lines = random_subset(rng, grid.line_count(), 60);
  config.pmu_buses = random_subset(rng, grid.bus_count(), 60);
  auto draw = [&]() {
    return static_cast<Cost>(uniform_below(rng, max_cost + 1));
  };
  for (int i : config.measured_injections) config.cost_injection[i] = draw();
  for (int e : config.measured_lines) config.cost_line[e] = draw();
  for (int k : config.pmu_buses) config.cost_pmu[k] = draw();
  return config;
}

inline MeasurementConfig full_config(const Grid& grid, Cost cost = 1) {
  MeasurementConfig config;
  for (int i = 0; i < grid.bus_count(); ++i) {
    config.measured_injections.push_back(i);
    config.pmu_buses.push_back(i);
    config.cost_injection[i] = cost;
    config.cost_pmu[i] = cost;
  }
  for (int e = 0; e < grid.line_count(); ++e) {
    config.measured_lines.push_back(e);
    config.cost_line[e] = cost;
  }
  return config;
}

inline ProtectionPlan random_plan(std::mt19937_64& rng,
                                  const MeasurementConfig& config,
                                  int percent_in = 50) {
  ProtectionPlan plan;
  auto pick = [&](const std::vector<int>& from, std::vector<int>& to) {
    for (int v : from) {
      if (uniform_below(rng, 100) < static_cast<std::uint64_t>(percent_in)) {
        to.push_back(v);
      }
    }
  };
  pick(config.measured_injections, plan.protected_injections);
  pick(config.measured_lines, plan.protected_lines);
  pick(config.pmu_buses, plan.protected_pmus);
  return plan;
}

/// The unit-cost full-measurement study instance on the 9-bus system:
/// zero-injection buses 4, 6, 8 cost nothing, everything else costs one.
inline MeasurementConfig case9_unitcost(const Grid& grid) {
  MeasurementConfig config = full_config(grid, 1);
  for (BusId zero : {4, 6, 8}) {
    config.cost_injection[grid.bus_index(zero)] = 0;
  }
  return config;
}

/// Minimum protection cost by explicit enumeration over all plans, with
/// the cost bound applied before the (expensive) feasibility probe.
inline std::optional<Cost> enumerate_min_cost(const Grid& grid,
                                              const MeasurementConfig& config) {
  struct Entity {
    int kind;
    int index;
    Cost cost;
  };
  std::vector<Entity> entities;
  for (int i : config.measured_injections) {
    entities.push_back({0, i, config.cost_injection.at(i)});
  }
  for (int e : config.measured_lines) {
    entities.push_back({1, e, config.cost_line.at(e)});
  }
  for (int k : config.pmu_buses) {
    entities.push_back({2, k, config.cost_pmu.at(k)});
  }
  const int count = static_cast<int>(entities.size());
  if (count > 24) throw std::runtime_error("enumeration oracle: too large");
  std::optional<Cost> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << count); ++mask) {
    Cost cost = 0;
    for (int b = 0; b < count; ++b) {
      if (mask >> b & 1) cost += entities[b].cost;
    }
    if (best && cost >= *best) continue;
    ProtectionPlan plan;
    for (int b = 0; b < count; ++b) {
      if (!(mask >> b & 1)) continue;
      if (entities[b].kind == 0) plan.protected_injections.push_back(entities[b].index);
      if (entities[b].kind == 1) plan.protected_lines.push_back(entities[b].index);
      if (entities[b].kind == 2) plan.protected_pmus.push_back(entities[b].index);
    }
    std::sort(plan.protected_injections.begin(), plan.protected_injections.end());
    std::sort(plan.protected_lines.begin(), plan.protected_lines.end());
    std::sort(plan.protected_pmus.begin(), plan.protected_pmus.end());
    if (is_topologically_observable(grid, plan)) best = cost;
  }
  return best;
}

/// Does a node assignment exist: can V minus the covered set be matched
/// injectively into the injections, each bus to an injection in its
/// closed neighborhood? Backtracking search, independent of the library's
/// conversion code.
inline bool exists_h_bruteforce(const Grid& grid,
                                const std::vector<int>& injections,
                                const std::vector<int>& covered) {
  std::vector<int> needy;
  for (int v = 0; v < grid.bus_count(); ++v) {
    if (!std::binary_search(covered.begin(), covered.end(), v)) {
      needy.push_back(v);
    }
  }
  std::vector<char> used(grid.bus_count(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == needy.size()) return true;
    int bus = needy[k];
    for (int i : injections) {
      if (used[i]) continue;
      bool can = (i == bus) || std::binary_search(grid.neighbors(i).begin(),
                                                  grid.neighbors(i).end(), bus);
      if (!can) continue;
      used[i] = 1;
      if (place(k + 1)) return true;
      used[i] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace ppp::test
