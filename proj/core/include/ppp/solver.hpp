#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ppp/constructions.hpp"
#include "ppp/grid.hpp"
#include "ppp/instance.hpp"
#include "ppp/observability.hpp"

namespace ppp {

enum class SolveStatus { Optimal, Infeasible, BudgetExhausted };

struct SolveReport {
  SolveStatus status = SolveStatus::Infeasible;
  Cost optimal_cost = 0;  // cost of `plan` when present
  std::optional<ProtectionPlan> plan;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
  bool certified = false;  // verify_plan accepted the returned plan
};

struct SolveOptions {
  std::uint64_t node_budget = UINT64_MAX;
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
  bool certify = true;
};

/// Exact minimum-cost protection placement by best-first branch and bound
/// over protection decisions. A node is pruned when even protecting all
/// of its undecided entities fails the observability oracle (sound by
/// monotonicity) and closed when its committed set alone passes. The
/// committed cost is the (admissible) bound. Zero-cost entities are fixed
/// to protected upfront. Among equal-cost optima the lexicographically
/// smallest plan is returned (entities ordered injections, lines, PMUs,
/// each ascending). The parallel mode expands cost buckets concurrently
/// and returns the same report as the sequential reference.
SolveReport solve_exact(const Grid& grid, const MeasurementConfig& config,
                        const SolveOptions& options = {});

/// Initial incumbent: from the all-protected plan, drop entities in
/// descending cost order (ties: later canonical rank first) whenever the
/// oracle still passes. Empty when even all-protected is infeasible; the
/// result is feasible and inclusion-minimal.
std::optional<ProtectionPlan> greedy_upper_bound(const Grid& grid,
                                                 const MeasurementConfig& config);

/// Feasibility certificates for a plan: the line assignment, the node
/// assignment (when no lines are protected), and the spanning-tree arcs
/// with node labels that complete the connectivity formulation.
struct WitnessBundle {
  AssignmentG g;
  std::optional<AssignmentH> h;
  std::vector<std::pair<int, int>> tree_arcs;  // (node, parent), root = n
  std::vector<Cost> node_labels;               // u by node index, root last
};

/// Constructive certification: obtains an oracle witness, builds a BFS
/// spanning tree of the enabled edges, derives arc and label values, and
/// evaluates every constraint of the full connectivity model exactly.
/// False (with an empty bundle) when the oracle rejects the plan.
std::pair<bool, WitnessBundle> certify_formulation(const Grid& grid,
                                                   const MeasurementConfig& config,
                                                   const ProtectionPlan& plan);

/// Topological oracle and randomized algebraic rank check must both pass.
bool verify_plan(const Grid& grid, const MeasurementConfig& config,
                 const ProtectionPlan& plan, std::uint64_t seed = 0x5eed);

}  // namespace ppp
