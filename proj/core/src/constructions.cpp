#include "ppp/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ppp/dsu.hpp"
#include "ppp/errors.hpp"

namespace ppp {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool adjacent(const Grid& grid, int a, int b) {
  return std::binary_search(grid.neighbors(a).begin(), grid.neighbors(a).end(),
                            b);
}

/// Line between a and b with the smallest index.
int line_between(const Grid& grid, int a, int b) {
  int best = -1;
  for (int e : grid.incident_lines(a)) {
    auto [u, v] = grid.line(e);
    if ((u == a && v == b) || (u == b && v == a)) {
      if (best < 0 || e < best) best = e;
    }
  }
  if (best < 0) {
    throw Error("internal: no line between " + std::to_string(grid.bus_id(a)) +
                " and " + std::to_string(grid.bus_id(b)));
  }
  return best;
}

bool condition_a_holds(const Grid& grid, const std::vector<int>& injections,
                       const std::vector<int>& covered, const AssignmentG& g) {
  const int n = grid.bus_count();
  DisjointSets dsu(n + 1);
  for (int i : covered) dsu.unite(i, n);
  for (const auto& [i, e] : g) {
    if (!contains(injections, i)) return false;
    auto [u, v] = grid.line(e);
    if (u != i && v != i) return false;
    dsu.unite(u, v);
  }
  return dsu.components() == 1;
}

}  // namespace

bool verify_condition_b(const Grid& grid, const std::vector<int>& injections,
                        const std::vector<int>& covered, const AssignmentH& h) {
  std::vector<char> hit(grid.bus_count(), 0);
  for (int p : covered) hit.at(p) = 1;
  for (const auto& [i, target] : h) {
    if (!contains(injections, i)) return false;
    if (target != i && !adjacent(grid, i, target)) return false;
    hit.at(target) = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

AssignmentH h_from_g(const Grid& grid, const std::vector<int>& injections,
                     const std::vector<int>& covered, const AssignmentG& g) {
  if (!condition_a_holds(grid, injections, covered, g)) {
    throw PreconditionError("h_from_g: assignment does not connect the grid");
  }
  const int n = grid.bus_count();
  const int root = n;

  // Adjacency of the witness graph: assigned lines plus coverage links.
  std::vector<std::vector<int>> adj(n + 1);
  std::set<int> g_lines;
  for (const auto& [i, e] : g) g_lines.insert(e);
  for (int e : g_lines) {
    auto [u, v] = grid.line(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int p : covered) {
    adj[root].push_back(p);
    adj[p].push_back(root);
  }
  auto by_id = [&](int a, int b) {
    if (a == root) return false;
    if (b == root) return true;
    return grid.bus_id(a) < grid.bus_id(b);
  };
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), by_id);
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // BFS tree rooted at the reference node, ascending-id neighbor order.
  std::vector<int> parent(n + 1, -1), order;
  std::vector<std::vector<int>> children(n + 1);
  std::deque<int> queue{root};
  parent[root] = root;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : adj[v]) {
      if (parent[w] < 0) {
        parent[w] = v;
        children[v].push_back(w);
        queue.push_back(w);
      }
    }
  }

  AssignmentH h;
  // Reverse level order, truncated: leaves and the root are dropped.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int i = *it;
    if (i == root || children[i].empty()) continue;
    for (int j : children[i]) {
      if (j == root || i == root) {
        throw Error("internal: coverage link below the root level");
      }
      auto assigned_to_edge = [&](int node) {
        auto at = g.find(node);
        if (at == g.end()) return false;
        auto [u, v] = grid.line(at->second);
        return (u == i && v == j) || (u == j && v == i);
      };
      if (assigned_to_edge(j)) {
        h[j] = j;
      } else {
        // The tree edge must then be i's own assignment.
        if (!assigned_to_edge(i)) {
          throw Error("internal: tree edge not covered by the assignment");
        }
        if (h.count(i)) {
          throw Error("internal: double assignment while converting");
        }
        h[i] = j;
      }
    }
  }
  return h;
}

AssignmentG g_from_h(const Grid& grid, const std::vector<int>& injections,
                     const std::vector<int>& covered, const AssignmentH& h) {
  if (!grid.connected()) {
    throw PreconditionError("g_from_h: grid must be connected");
  }
  if (covered.empty()) {
    throw PreconditionError("g_from_h: covered set must be nonempty");
  }
  if (!verify_condition_b(grid, injections, covered, h)) {
    throw PreconditionError("g_from_h: node assignment does not cover the grid");
  }
  const int n = grid.bus_count();

  // Preimages under h, smallest external id first.
  std::vector<std::vector<int>> preimage(n);
  for (const auto& [j, target] : h) preimage[target].push_back(j);
  for (auto& list : preimage) {
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return grid.bus_id(a) < grid.bus_id(b); });
  }

  std::vector<char> reached(n, 0), in_cycle(n, 0);
  for (int p : covered) reached[p] = 1;
  AssignmentG g;
  auto assign = [&](int node, int line) {
    if (g.count(node)) throw Error("internal: double edge assignment");
    g[node] = line;
  };

  std::vector<int> by_id(n);
  for (int i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(),
            [&](int a, int b) { return grid.bus_id(a) < grid.bus_id(b); });

  std::vector<std::vector<int>> cycles;
  for (int start : by_id) {
    if (reached[start] || in_cycle[start]) continue;
    std::vector<int> chain{start};
    std::vector<char> in_chain(n, 0);
    in_chain[start] = 1;
    while (true) {
      int cur = chain.back();
      if (preimage[cur].empty()) {
        throw Error("internal: uncovered bus while converting");
      }
      int next = preimage[cur].front();
      if (reached[next]) {
        // The chain reaches the grown set; assign each link to the line
        // toward its h-image and absorb the chain.
        for (std::size_t k = 1; k < chain.size(); ++k) {
          assign(chain[k], line_between(grid, chain[k], chain[k - 1]));
        }
        assign(next, line_between(grid, next, cur));
        for (int v : chain) reached[v] = 1;
        break;
      }
      if (next == start) {
        for (int v : chain) in_cycle[v] = 1;
        cycles.push_back(chain);
        break;
      }
      if (in_chain[next] || in_cycle[next]) {
        throw Error("internal: assignment chain revisited a node");
      }
      chain.push_back(next);
      in_chain[next] = 1;
    }
  }

  // Attach recorded cycles through a grid line into the grown set,
  // smallest (anchor, cycle-node) id pair first.
  std::vector<char> attached(cycles.size(), 0);
  std::size_t remaining =
      static_cast<std::size_t>(std::count(attached.begin(), attached.end(), 0));
  while (remaining > 0) {
    int best_u = -1, best_v = -1, best_cycle = -1;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (attached[c]) continue;
      for (int v : cycles[c]) {
        for (int u : grid.neighbors(v)) {
          if (!reached[u]) continue;
          if (best_u < 0 || std::pair(grid.bus_id(u), grid.bus_id(v)) <
                                std::pair(grid.bus_id(best_u), grid.bus_id(best_v))) {
            best_u = u;
            best_v = v;
            best_cycle = static_cast<int>(c);
          }
        }
      }
    }
    if (best_cycle < 0) {
      throw Error("internal: no cycle adjacent to the grown set");
    }
    const auto& cycle = cycles[best_cycle];
    const int d = static_cast<int>(cycle.size());
    int t = static_cast<int>(
        std::find(cycle.begin(), cycle.end(), best_v) - cycle.begin());
    // Around the cycle each node takes the line toward its h-image; the
    // anchor node takes the bridging line instead. Chain order [c0..c_{d-1}]
    // has h(c_k) = c_{k-1} and h(c_0) = c_{d-1}, so the preimage walk from
    // best_v visits t+1, t+2, ... modulo d.
    for (int l = 1; l <= d - 1; ++l) {
      int node = cycle[(t + l) % d];
      int image = cycle[(t + l - 1 + d) % d];
      assign(node, line_between(grid, node, image));
    }
    assign(best_v, line_between(grid, best_u, best_v));
    for (int v : cycle) {
      reached[v] = 1;
      in_cycle[v] = 0;
    }
    attached[best_cycle] = 1;
    --remaining;
  }
  return g;
}

}  // namespace ppp
