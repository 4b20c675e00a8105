#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ppp/grid.hpp"
#include "ppp/instance.hpp"

namespace ppp {

/// The grid extended with a reference node and one edge {i, root} per
/// PMU-covered bus i. The reference node is indexed grid.bus_count().
struct AugmentedGraph {
  int root;
  std::vector<int> covered;                    // P(z), ascending bus indices
  std::vector<std::pair<int, int>> pmu_edges;  // {bus, root}
};

AugmentedGraph build_augmented(const Grid& grid, const ProtectionPlan& plan);

/// Assignment of (some) protected injection buses to incident lines.
/// Injections absent from the map are unused; an assignment is valid when
/// every assigned line is incident to its injection.
using AssignmentG = std::map<int, int>;  // bus index -> line index

/// Decides whether the protected subsystem is topologically observable:
/// whether an assignment g exists such that the protected lines, the PMU
/// coverage edges and g's lines connect all buses to the reference node.
/// On success returns a valid witness assignment (possibly empty).
///
/// The decision runs in polynomial time: coverage edges and protected
/// lines are contracted, then a maximum common independent set between
/// the graphic matroid of the contracted multigraph and the unit-capacity
/// partition matroid over injections is grown with shortest augmenting
/// paths in the exchange graph.
std::optional<AssignmentG> topological_witness(const Grid& grid,
                                               const ProtectionPlan& plan);

inline bool is_topologically_observable(const Grid& grid,
                                        const ProtectionPlan& plan) {
  return topological_witness(grid, plan).has_value();
}

/// Checks a witness: assigned injections must be protected, lines must be
/// incident, and the induced graph must be connected.
bool verify_g(const Grid& grid, const ProtectionPlan& plan,
              const AssignmentG& g);

/// Test oracle: enumerates, in lexicographic edge order, every assignment
/// over the protected injections with at least one incident line, and
/// returns the first one whose induced graph is connected. Refuses to run
/// (SizeError) when the candidate count exceeds 10^6.
std::optional<AssignmentG> brute_force_g_search(const Grid& grid,
                                                const ProtectionPlan& plan);

/// The same decision on the original graph, without reference node or PMU
/// edges: do lines L plus an assignment over I connect all of V?
std::optional<AssignmentG> no_pmu_witness(const Grid& grid,
                                          const std::vector<int>& injections,
                                          const std::vector<int>& lines);

inline bool is_observable_no_pmu(const Grid& grid,
                                 const std::vector<int>& injections,
                                 const std::vector<int>& lines) {
  return no_pmu_witness(grid, injections, lines).has_value();
}

}  // namespace ppp
