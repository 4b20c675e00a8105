#include "ppp/observability.hpp"

#include <algorithm>
#include <deque>

#include "ppp/dsu.hpp"
#include "ppp/errors.hpp"

namespace ppp {

AugmentedGraph build_augmented(const Grid& grid, const ProtectionPlan& plan) {
  AugmentedGraph aug;
  aug.root = grid.bus_count();
  aug.covered = pmu_coverage(grid, plan.protected_pmus);
  aug.pmu_edges.reserve(aug.covered.size());
  for (int i : aug.covered) aug.pmu_edges.emplace_back(i, aug.root);
  return aug;
}

namespace {

struct GroundElem {
  int injection;  // bus index
  int line;       // line index
  int cu, cv;     // contracted endpoints (roots in the base contraction)
};

/// Maximum common independent set between the graphic matroid of the
/// contracted multigraph and the partition matroid with one unit part per
/// injection. Grown by shortest augmenting paths in the exchange graph;
/// for the graphic matroid the exchange arcs into an element outside the
/// set are exactly the elements on its fundamental cycle in the current
/// forest.
std::optional<AssignmentG> assignment_spanning(
    const Grid& grid, const std::vector<int>& injections,
    const std::vector<int>& base_lines, const std::vector<int>& covered,
    bool with_root) {
  const int n = grid.bus_count();
  const int node_count = n + (with_root ? 1 : 0);
  if (node_count == 0) return AssignmentG{};

  DisjointSets base(node_count);
  for (int e : base_lines) {
    auto [u, v] = grid.line(e);
    base.unite(u, v);
  }
  if (with_root) {
    for (int i : covered) base.unite(i, n);
  }
  const int target = base.components() - 1;
  if (target == 0) return AssignmentG{};

  // Candidate elements: incident lines of each injection, in canonical
  // line order; lines inside one contracted component can never help.
  std::vector<int> canonical_rank(grid.line_count());
  {
    auto order = grid.canonical_line_order();
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
      canonical_rank[order[pos]] = pos;
    }
  }
  std::vector<GroundElem> elems;
  for (int i : injections) {
    std::vector<int> lines = grid.incident_lines(i);
    std::sort(lines.begin(), lines.end(), [&](int a, int b) {
      return canonical_rank[a] < canonical_rank[b];
    });
    for (int e : lines) {
      auto [u, v] = grid.line(e);
      int cu = base.find(u), cv = base.find(v);
      if (cu != cv) elems.push_back({i, e, cu, cv});
    }
  }
  const int ground = static_cast<int>(elems.size());

  std::vector<char> in_set(ground, 0);
  std::map<int, int> used_inj;  // injection bus -> element index in the set
  int set_size = 0;

  while (set_size < target) {
    // Forest over contracted nodes from the current set.
    std::vector<std::vector<std::pair<int, int>>> forest(node_count);
    for (int j = 0; j < ground; ++j) {
      if (!in_set[j]) continue;
      forest[elems[j].cu].push_back({elems[j].cv, j});
      forest[elems[j].cv].push_back({elems[j].cu, j});
    }
    DisjointSets trees(node_count);
    for (int j = 0; j < ground; ++j) {
      if (in_set[j]) trees.unite(elems[j].cu, elems[j].cv);
    }

    // Fundamental cycle of each outside element whose endpoints share a
    // tree; outside elements with separated endpoints are sources.
    std::vector<std::vector<int>> cycle_of(ground);
    std::vector<std::vector<int>> arcs_from_set(ground);  // x in S -> ys
    std::vector<char> is_source(ground, 0), is_sink(ground, 0);
    for (int y = 0; y < ground; ++y) {
      if (in_set[y]) continue;
      if (!used_inj.count(elems[y].injection)) is_sink[y] = 1;
      if (!trees.same(elems[y].cu, elems[y].cv)) {
        is_source[y] = 1;
        continue;
      }
      // Path from cu to cv in the forest (BFS).
      std::vector<int> parent_node(node_count, -1), parent_edge(node_count, -1);
      std::deque<int> bfs{elems[y].cu};
      parent_node[elems[y].cu] = elems[y].cu;
      while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        if (v == elems[y].cv) break;
        for (auto [w, j] : forest[v]) {
          if (parent_node[w] < 0) {
            parent_node[w] = v;
            parent_edge[w] = j;
            bfs.push_back(w);
          }
        }
      }
      for (int v = elems[y].cv; v != elems[y].cu; v = parent_node[v]) {
        cycle_of[y].push_back(parent_edge[v]);
        arcs_from_set[parent_edge[v]].push_back(y);
      }
    }

    // Shortest source-to-sink path in the exchange graph.
    std::vector<int> prev(ground, -2);
    std::deque<int> queue;
    for (int y = 0; y < ground; ++y) {
      if (!in_set[y] && is_source[y]) {
        prev[y] = -1;
        queue.push_back(y);
      }
    }
    int reached_sink = -1;
    while (!queue.empty() && reached_sink < 0) {
      int v = queue.front();
      queue.pop_front();
      if (!in_set[v]) {
        if (is_sink[v]) {
          reached_sink = v;
          break;
        }
        int x = used_inj.at(elems[v].injection);
        if (prev[x] == -2) {
          prev[x] = v;
          queue.push_back(x);
        }
      } else {
        for (int y : arcs_from_set[v]) {
          if (prev[y] == -2) {
            prev[y] = v;
            queue.push_back(y);
          }
        }
      }
    }
    if (reached_sink < 0) break;  // no augmenting path

    for (int v = reached_sink; v != -1; v = prev[v]) in_set[v] ^= 1;
    used_inj.clear();
    set_size = 0;
    for (int j = 0; j < ground; ++j) {
      if (in_set[j]) {
        used_inj[elems[j].injection] = j;
        ++set_size;
      }
    }
  }

  if (set_size < target) return std::nullopt;
  AssignmentG g;
  for (int j = 0; j < ground; ++j) {
    if (in_set[j]) g[elems[j].injection] = elems[j].line;
  }
  return g;
}

bool connects_everything(const Grid& grid, const std::vector<int>& lines,
                         const std::vector<int>& covered, const AssignmentG& g,
                         bool with_root) {
  const int n = grid.bus_count();
  DisjointSets dsu(n + (with_root ? 1 : 0));
  for (int e : lines) {
    auto [u, v] = grid.line(e);
    dsu.unite(u, v);
  }
  if (with_root) {
    for (int i : covered) dsu.unite(i, n);
  }
  for (const auto& [i, e] : g) {
    auto [u, v] = grid.line(e);
    dsu.unite(u, v);
  }
  return dsu.components() == 1;
}

}  // namespace

std::optional<AssignmentG> topological_witness(const Grid& grid,
                                               const ProtectionPlan& plan) {
  return assignment_spanning(grid, plan.protected_injections,
                             plan.protected_lines,
                             pmu_coverage(grid, plan.protected_pmus),
                             /*with_root=*/true);
}

std::optional<AssignmentG> no_pmu_witness(const Grid& grid,
                                          const std::vector<int>& injections,
                                          const std::vector<int>& lines) {
  return assignment_spanning(grid, injections, lines, {}, /*with_root=*/false);
}

bool verify_g(const Grid& grid, const ProtectionPlan& plan,
              const AssignmentG& g) {
  for (const auto& [i, e] : g) {
    if (!std::binary_search(plan.protected_injections.begin(),
                            plan.protected_injections.end(), i)) {
      return false;
    }
    if (e < 0 || e >= grid.line_count()) return false;
    auto [u, v] = grid.line(e);
    if (u != i && v != i) return false;
  }
  return connects_everything(grid, plan.protected_lines,
                             pmu_coverage(grid, plan.protected_pmus), g,
                             /*with_root=*/true);
}

std::optional<AssignmentG> brute_force_g_search(const Grid& grid,
                                                const ProtectionPlan& plan) {
  auto covered = pmu_coverage(grid, plan.protected_pmus);

  std::vector<int> canonical_rank(grid.line_count());
  {
    auto order = grid.canonical_line_order();
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
      canonical_rank[order[pos]] = pos;
    }
  }

  // Injections without an incident line cannot be assigned and contribute
  // nothing; enumeration runs over the others.
  std::vector<int> assignable;
  std::vector<std::vector<int>> candidates;
  long long total = 1;
  for (int i : plan.protected_injections) {
    if (grid.degree(i) == 0) continue;
    assignable.push_back(i);
    std::vector<int> lines = grid.incident_lines(i);
    std::sort(lines.begin(), lines.end(), [&](int a, int b) {
      return canonical_rank[a] < canonical_rank[b];
    });
    total *= static_cast<long long>(lines.size());
    if (total > 1000000) {
      throw SizeError("brute_force_g_search: candidate space exceeds 10^6");
    }
    candidates.push_back(std::move(lines));
  }

  DisjointSets base(grid.bus_count() + 1);
  for (int e : plan.protected_lines) {
    auto [u, v] = grid.line(e);
    base.unite(u, v);
  }
  for (int i : covered) base.unite(i, grid.bus_count());

  const int k = static_cast<int>(assignable.size());
  std::vector<int> choice(k, 0);
  while (true) {
    DisjointSets dsu = base;
    for (int j = 0; j < k; ++j) {
      auto [u, v] = grid.line(candidates[j][choice[j]]);
      dsu.unite(u, v);
    }
    if (dsu.components() == 1) {
      AssignmentG g;
      for (int j = 0; j < k; ++j) g[assignable[j]] = candidates[j][choice[j]];
      return g;
    }
    int pos = k - 1;
    while (pos >= 0 && choice[pos] + 1 == static_cast<int>(candidates[pos].size())) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }
  return std::nullopt;
}

}  // namespace ppp
