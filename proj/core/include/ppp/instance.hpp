#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppp/grid.hpp"

namespace ppp {

using Cost = std::int64_t;

/// Which measurements exist and what protecting each one costs. Sets hold
/// internal indices, sorted ascending. Cost maps are total exactly on the
/// corresponding measured sets; zero-injection buses appear as measured
/// injections with cost 0.
struct MeasurementConfig {
  std::vector<int> measured_injections;  // M^I, bus indices
  std::vector<int> measured_lines;       // M^L, line indices
  std::vector<int> pmu_buses;            // M^P, bus indices
  std::map<int, Cost> cost_injection;
  std::map<int, Cost> cost_line;
  std::map<int, Cost> cost_pmu;
};

/// A protection decision: which measured entities are protected.
struct ProtectionPlan {
  std::vector<int> protected_injections;  // subset of M^I
  std::vector<int> protected_lines;       // subset of M^L
  std::vector<int> protected_pmus;        // subset of M^P
};

void validate_config(const Grid& grid, const MeasurementConfig& config);
void validate_plan(const Grid& grid, const MeasurementConfig& config,
                   const ProtectionPlan& plan);

Cost plan_cost(const MeasurementConfig& config, const ProtectionPlan& plan);

struct Instance {
  Grid grid;
  MeasurementConfig config;
};

/// Reads the native JSON instance format. Line-valued keys (`M_L`, `c_L`,
/// `reactance`) refer to positions in the `lines` array.
Instance load_instance(const std::string& json_text);

/// Canonical serialization: object keys sorted, lines sorted
/// lexicographically by external endpoint pair (line-indexed data is
/// remapped accordingly). load_instance(save_instance(x)) round-trips
/// byte-stably.
std::string save_instance(const Instance& instance);

std::string plan_to_json(const Grid& grid, const ProtectionPlan& plan);

/// Parses {protected_injections, protected_lines, protected_pmus}. Each
/// [i,j] entry protects the lowest-indexed measured, not yet protected
/// line with those endpoints.
ProtectionPlan plan_from_json(const Grid& grid, const MeasurementConfig& config,
                              const std::string& json_text);

}  // namespace ppp
