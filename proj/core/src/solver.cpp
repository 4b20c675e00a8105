#include "ppp/solver.hpp"

#include <algorithm>
#include <queue>
#include <thread>

#include "ppp/errors.hpp"
#include "ppp/formulations.hpp"
#include "ppp/rank_check.hpp"

namespace ppp {

namespace {

enum Kind { kInjection = 0, kLine = 1, kPmu = 2 };

struct Entity {
  int kind;
  int index;  // bus or line index
  Cost cost;
};

/// Canonical decision order: injections by bus id, lines by sorted
/// external pair, PMUs by bus id.
std::vector<Entity> entity_list(const Grid& grid,
                                const MeasurementConfig& config) {
  std::vector<Entity> entities;
  std::vector<int> inj = config.measured_injections;
  std::sort(inj.begin(), inj.end(),
            [&](int a, int b) { return grid.bus_id(a) < grid.bus_id(b); });
  for (int i : inj) entities.push_back({kInjection, i, config.cost_injection.at(i)});
  auto order = grid.canonical_line_order();
  for (int e : order) {
    if (std::binary_search(config.measured_lines.begin(),
                           config.measured_lines.end(), e)) {
      entities.push_back({kLine, e, config.cost_line.at(e)});
    }
  }
  std::vector<int> pmus = config.pmu_buses;
  std::sort(pmus.begin(), pmus.end(),
            [&](int a, int b) { return grid.bus_id(a) < grid.bus_id(b); });
  for (int k : pmus) entities.push_back({kPmu, k, config.cost_pmu.at(k)});
  return entities;
}

ProtectionPlan plan_from_ranks(const std::vector<Entity>& entities,
                               const std::vector<int>& ranks) {
  ProtectionPlan plan;
  for (int r : ranks) {
    const Entity& e = entities[r];
    if (e.kind == kInjection) plan.protected_injections.push_back(e.index);
    if (e.kind == kLine) plan.protected_lines.push_back(e.index);
    if (e.kind == kPmu) plan.protected_pmus.push_back(e.index);
  }
  std::sort(plan.protected_injections.begin(), plan.protected_injections.end());
  std::sort(plan.protected_lines.begin(), plan.protected_lines.end());
  std::sort(plan.protected_pmus.begin(), plan.protected_pmus.end());
  return plan;
}

constexpr char kUndecided = 0, kIn = 1, kOut = 2;

struct Node {
  std::vector<char> state;
  Cost committed = 0;
  std::uint64_t seq = 0;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.committed != b.committed) return a.committed > b.committed;
    return a.seq > b.seq;  // FIFO among equal bounds
  }
};

struct Expansion {
  bool pruned = false;
  bool closed = false;
  std::vector<int> closed_ranks;  // the committed set when closed
  int branch_rank = -1;
};

class Search {
public:
  Search(const Grid& grid, const MeasurementConfig& config)
      : grid_(grid), entities_(entity_list(grid, config)) {
    by_cost_.resize(entities_.size());
    for (int r = 0; r < static_cast<int>(entities_.size()); ++r) by_cost_[r] = r;
    std::sort(by_cost_.begin(), by_cost_.end(), [&](int a, int b) {
      if (entities_[a].cost != entities_[b].cost) {
        return entities_[a].cost > entities_[b].cost;
      }
      return a < b;
    });
  }

  const std::vector<Entity>& entities() const { return entities_; }

  bool oracle(const std::vector<char>& state, char include_mark) const {
    ProtectionPlan plan;
    for (int r = 0; r < static_cast<int>(entities_.size()); ++r) {
      if (state[r] != kIn && state[r] != include_mark) continue;
      const Entity& e = entities_[r];
      if (e.kind == kInjection) plan.protected_injections.push_back(e.index);
      if (e.kind == kLine) plan.protected_lines.push_back(e.index);
      if (e.kind == kPmu) plan.protected_pmus.push_back(e.index);
    }
    std::sort(plan.protected_injections.begin(), plan.protected_injections.end());
    std::sort(plan.protected_lines.begin(), plan.protected_lines.end());
    std::sort(plan.protected_pmus.begin(), plan.protected_pmus.end());
    return is_topologically_observable(grid_, plan);
  }

  /// Decides a node: close, prune, or pick the branching entity
  /// (critical-first, then maximum cost).
  Expansion expand(const Node& node) const {
    Expansion result;
    if (oracle(node.state, kIn)) {
      result.closed = true;
      for (int r = 0; r < static_cast<int>(entities_.size()); ++r) {
        if (node.state[r] == kIn) result.closed_ranks.push_back(r);
      }
      return result;
    }
    if (!oracle(node.state, kUndecided)) {
      result.pruned = true;
      return result;
    }
    std::vector<char> probe = node.state;
    int fallback = -1;
    for (int r : by_cost_) {
      if (node.state[r] != kUndecided) continue;
      if (fallback < 0) fallback = r;
      probe[r] = kOut;
      bool critical = !oracle(probe, kUndecided);
      probe[r] = kUndecided;
      if (critical) {
        result.branch_rank = r;
        return result;
      }
    }
    result.branch_rank = fallback;
    return result;
  }

private:
  const Grid& grid_;
  std::vector<Entity> entities_;
  std::vector<int> by_cost_;  // ranks in (cost desc, rank asc) order
};

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::optional<ProtectionPlan> greedy_upper_bound(const Grid& grid,
                                                 const MeasurementConfig& config) {
  validate_config(grid, config);
  Search search(grid, config);
  const auto& entities = search.entities();
  std::vector<char> state(entities.size(), kIn);
  if (!search.oracle(state, kIn)) return std::nullopt;

  std::vector<int> order(entities.size());
  for (int r = 0; r < static_cast<int>(entities.size()); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (entities[a].cost != entities[b].cost) {
      return entities[a].cost > entities[b].cost;
    }
    return a > b;  // reverse canonical on ties
  });
  for (int r : order) {
    state[r] = kOut;
    if (!search.oracle(state, kIn)) state[r] = kIn;
  }
  std::vector<int> kept;
  for (int r = 0; r < static_cast<int>(entities.size()); ++r) {
    if (state[r] == kIn) kept.push_back(r);
  }
  return plan_from_ranks(entities, kept);
}

SolveReport solve_exact(const Grid& grid, const MeasurementConfig& config,
                        const SolveOptions& options) {
  validate_config(grid, config);
  auto t0 = std::chrono::steady_clock::now();
  SolveReport report;

  Search search(grid, config);
  const auto& entities = search.entities();
  const int count = static_cast<int>(entities.size());

  Node root;
  root.state.assign(count, kUndecided);
  for (int r = 0; r < count; ++r) {
    if (entities[r].cost == 0) root.state[r] = kIn;  // free, never harmful
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> frontier;
  std::uint64_t seq = 0;
  frontier.push(root);

  std::optional<Cost> best_cost;
  std::vector<int> best_ranks;
  bool budget_hit = false;

  unsigned thread_count = options.threads ? options.threads
                                          : std::thread::hardware_concurrency();
  if (thread_count == 0) thread_count = 1;

  while (!frontier.empty()) {
    if (best_cost && frontier.top().committed > *best_cost) break;
    if (report.nodes_explored >= options.node_budget) {
      budget_hit = true;
      break;
    }

    // Take a batch: in sequential mode a single node, in parallel mode the
    // whole current cost bucket (its expansions are order-independent).
    std::vector<Node> batch;
    batch.push_back(frontier.top());
    frontier.pop();
    if (options.parallel) {
      Cost bucket = batch[0].committed;
      while (!frontier.empty() && frontier.top().committed == bucket &&
             report.nodes_explored + batch.size() < options.node_budget) {
        batch.push_back(frontier.top());
        frontier.pop();
      }
    }
    report.nodes_explored += batch.size();

    std::vector<Expansion> expansions(batch.size());
    if (options.parallel && batch.size() > 1 && thread_count > 1) {
      std::vector<std::thread> workers;
      std::size_t stride =
          (batch.size() + thread_count - 1) / thread_count;
      for (unsigned w = 0; w < thread_count; ++w) {
        std::size_t lo = w * stride;
        std::size_t hi = std::min(batch.size(), lo + stride);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi]() {
          for (std::size_t k = lo; k < hi; ++k) {
            expansions[k] = search.expand(batch[k]);
          }
        });
      }
      for (auto& t : workers) t.join();
    } else {
      for (std::size_t k = 0; k < batch.size(); ++k) {
        expansions[k] = search.expand(batch[k]);
      }
    }

    for (std::size_t k = 0; k < batch.size(); ++k) {
      const Node& node = batch[k];
      const Expansion& ex = expansions[k];
      if (ex.pruned) continue;
      if (ex.closed) {
        if (!best_cost || node.committed < *best_cost ||
            (node.committed == *best_cost && lex_less(ex.closed_ranks, best_ranks))) {
          best_cost = node.committed;
          best_ranks = ex.closed_ranks;
        }
        continue;
      }
      if (best_cost && node.committed > *best_cost) continue;
      Node out = node;
      out.state[ex.branch_rank] = kOut;
      out.seq = seq++;
      Node in = node;
      in.state[ex.branch_rank] = kIn;
      in.committed += entities[ex.branch_rank].cost;
      in.seq = seq++;
      frontier.push(std::move(out));
      frontier.push(std::move(in));
    }
  }

  report.wall_time = std::chrono::steady_clock::now() - t0;
  if (budget_hit) {
    report.status = SolveStatus::BudgetExhausted;
    if (best_cost) {
      report.optimal_cost = *best_cost;
      report.plan = plan_from_ranks(entities, best_ranks);
    } else if (auto greedy = greedy_upper_bound(grid, config)) {
      report.optimal_cost = plan_cost(config, *greedy);
      report.plan = std::move(greedy);
    }
  } else if (best_cost) {
    report.status = SolveStatus::Optimal;
    report.optimal_cost = *best_cost;
    report.plan = plan_from_ranks(entities, best_ranks);
  } else {
    report.status = SolveStatus::Infeasible;
  }
  if (report.plan && options.certify) {
    report.certified = verify_plan(grid, config, *report.plan);
  }
  report.wall_time = std::chrono::steady_clock::now() - t0;
  return report;
}

std::pair<bool, WitnessBundle> certify_formulation(const Grid& grid,
                                                   const MeasurementConfig& config,
                                                   const ProtectionPlan& plan) {
  validate_plan(grid, config, plan);
  auto witness = topological_witness(grid, plan);
  if (!witness) return {false, {}};

  const int n = grid.bus_count();
  const int root = n;
  auto covered = pmu_coverage(grid, plan.protected_pmus);

  // BFS tree over enabled edges: protected lines, witness lines, coverage
  // links. Ascending-id neighbor order keeps the tree reproducible.
  std::vector<std::vector<int>> adj(n + 1);
  {
    std::vector<int> lines = plan.protected_lines;
    for (const auto& [i, e] : *witness) lines.push_back(e);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (int e : lines) {
      auto [u, v] = grid.line(e);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int p : covered) {
      adj[root].push_back(p);
      adj[p].push_back(root);
    }
    for (auto& list : adj) {
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        if (a == root) return false;
        if (b == root) return true;
        return grid.bus_id(a) < grid.bus_id(b);
      });
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  std::vector<int> parent(n + 1, -1), depth(n + 1, 0);
  {
    std::vector<int> queue{root};
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : adj[v]) {
        if (parent[w] < 0) {
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  WitnessBundle bundle;
  bundle.g = *witness;
  bundle.node_labels.assign(n + 1, 0);
  bundle.node_labels[root] = n;
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0) {
      throw Error("internal: witness does not span the grid");
    }
    bundle.tree_arcs.emplace_back(i, parent[i]);
    bundle.node_labels[i] = n - depth[i];
  }
  if (plan.protected_lines.empty()) {
    bundle.h = h_from_g(grid, plan.protected_injections, covered, bundle.g);
  }

  // Evaluate the full connectivity model at the witness point.
  LinearModel model = build_mtz_full(grid, config);
  std::vector<Rational> values(model.variables.size(), Rational(0));
  auto set = [&](const std::string& name, Rational v) {
    values[model.var_index(name)] = std::move(v);
  };
  for (int i : plan.protected_injections) {
    set("x_" + std::to_string(grid.bus_id(i)), Rational(1));
  }
  for (int e : plan.protected_lines) set("y_" + grid.line_label(e), Rational(1));
  for (int k : plan.protected_pmus) {
    set("z_" + std::to_string(grid.bus_id(k)), Rational(1));
  }
  for (const auto& [i, e] : bundle.g) {
    set("w_" + grid.line_label(e) + "__" + std::to_string(grid.bus_id(i)),
        Rational(1));
  }
  auto node_name = [&](int v) {
    return v == root ? std::string("ROOT") : std::to_string(grid.bus_id(v));
  };
  for (auto [i, p] : bundle.tree_arcs) {
    set("f_" + node_name(i) + "_" + node_name(p), Rational(1));
  }
  for (int v = 0; v <= n; ++v) {
    set("u_" + node_name(v), Rational(bundle.node_labels[v]));
  }
  std::string violation;
  if (!satisfies_exactly(model, values, &violation)) {
    throw Error("internal: witness point rejected by the model: " + violation);
  }
  return {true, std::move(bundle)};
}

bool verify_plan(const Grid& grid, const MeasurementConfig& config,
                 const ProtectionPlan& plan, std::uint64_t seed) {
  try {
    validate_plan(grid, config, plan);
  } catch (const ValidationError&) {
    return false;
  }
  return is_topologically_observable(grid, plan) &&
         algebraic_rank_check(grid, plan, seed);
}

}  // namespace ppp
