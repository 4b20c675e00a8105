#pragma once

#include <map>
#include <vector>

#include "ppp/grid.hpp"
#include "ppp/observability.hpp"

namespace ppp {

/// Assignment of (some) injection buses to dominated buses: h(i) is the
/// bus whose coverage injection i accounts for. Valid entries satisfy
/// h(i) = i or {i, h(i)} being a line; absent entries are unconstrained.
using AssignmentH = std::map<int, int>;

/// Node-assignment certificate check: every assigned injection maps to
/// itself or a neighbor, and the covered set P together with the assigned
/// buses exhausts V.
bool verify_condition_b(const Grid& grid, const std::vector<int>& injections,
                        const std::vector<int>& covered, const AssignmentH& h);

/// Converts an edge-assignment certificate into a node-assignment one.
/// Walks a BFS spanning tree of (V + root, g-lines + coverage links) in
/// reverse level order, truncated below the leaves: a child that assigned
/// the tree edge itself accounts for its own bus, otherwise the inspected
/// parent must have assigned it and accounts for the child.
/// Precondition (checked): g is a connecting assignment for (I, P) with
/// no protected lines.
AssignmentH h_from_g(const Grid& grid, const std::vector<int>& injections,
                     const std::vector<int>& covered, const AssignmentG& g);

/// Converts a node-assignment certificate into an edge-assignment one by
/// growing the set of buses with a path to the reference node: preimage
/// chains under h are absorbed when they reach the grown set, pure
/// h-cycles are recorded and later attached through a grid line into the
/// grown set. Precondition (checked): grid connected, P nonempty,
/// verify_condition_b holds.
AssignmentG g_from_h(const Grid& grid, const std::vector<int>& injections,
                     const std::vector<int>& covered, const AssignmentH& h);

}  // namespace ppp
