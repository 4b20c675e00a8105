#include "ppp/formulations.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ppp/errors.hpp"

namespace ppp {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

struct Builder {
  LinearModel model;

  int add_var(std::string name, Rational lo, Rational hi, VarKind kind,
              VarRole role) {
    model.variables.push_back(
        {std::move(name), std::move(lo), std::move(hi), kind, role});
    return static_cast<int>(model.variables.size()) - 1;
  }

  void add_row(std::string name, std::vector<LinearTerm> terms, Sense sense,
               Rational rhs) {
    model.constraints.push_back(
        {std::move(name), std::move(terms), sense, std::move(rhs)});
  }
};

std::string ext(const Grid& grid, int bus) {
  return std::to_string(grid.bus_id(bus));
}

}  // namespace

LinearModel build_mtz_full(const Grid& grid, const MeasurementConfig& config) {
  validate_config(grid, config);
  const int n = grid.bus_count();
  const int m = grid.line_count();
  const int root = n;

  // Distinct unordered endpoint pairs in first-occurrence order; arcs are
  // per pair, enabling constraints sum over the parallel lines of a pair.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_lines;
  std::map<std::pair<int, int>, int> pair_index;
  for (int e = 0; e < m; ++e) {
    auto key = grid.line(e);
    auto it = pair_index.find(key);
    if (it == pair_index.end()) {
      pair_index[key] = static_cast<int>(pairs.size());
      pairs.push_back(key);
      pair_lines.push_back({e});
    } else {
      pair_lines[it->second].push_back(e);
    }
  }

  Builder b;
  b.model.tag = "mtz";

  std::vector<int> x(n), y(m), z(n);
  for (int i = 0; i < n; ++i) {
    Rational ub(contains(config.measured_injections, i) ? 1 : 0);
    x[i] = b.add_var("x_" + ext(grid, i), Rational(0), ub, VarKind::Binary,
                     {VarRole::Kind::InjectionX, i, -1});
  }
  for (int e = 0; e < m; ++e) {
    Rational ub(contains(config.measured_lines, e) ? 1 : 0);
    y[e] = b.add_var("y_" + grid.line_label(e), Rational(0), ub,
                     VarKind::Binary, {VarRole::Kind::LineY, e, -1});
  }
  for (int k = 0; k < n; ++k) {
    Rational ub(contains(config.pmu_buses, k) ? 1 : 0);
    z[k] = b.add_var("z_" + ext(grid, k), Rational(0), ub, VarKind::Binary,
                     {VarRole::Kind::PmuZ, k, -1});
  }
  // w_{e,i} only for i in e: two per line.
  std::vector<std::array<int, 2>> w(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = grid.line(e);
    const std::string label = grid.line_label(e);
    w[e][0] = b.add_var("w_" + label + "__" + ext(grid, u), Rational(0),
                        Rational(1), VarKind::Binary,
                        {VarRole::Kind::EdgeAssignW, e, u});
    w[e][1] = b.add_var("w_" + label + "__" + ext(grid, v), Rational(0),
                        Rational(1), VarKind::Binary,
                        {VarRole::Kind::EdgeAssignW, e, v});
  }
  // Arcs: both directions per pair, then both reference directions per bus.
  std::map<std::pair<int, int>, int> f;
  std::vector<std::pair<int, int>> arcs;
  auto arc_name = [&](int from, int to) {
    std::string a = from == root ? "ROOT" : ext(grid, from);
    std::string c = to == root ? "ROOT" : ext(grid, to);
    return "f_" + a + "_" + c;
  };
  auto add_arc = [&](int from, int to) {
    f[{from, to}] = b.add_var(arc_name(from, to), Rational(0), Rational(1),
                              VarKind::Binary, {VarRole::Kind::ArcF, from, to});
    arcs.emplace_back(from, to);
  };
  for (auto [u, v] : pairs) {
    add_arc(u, v);
    add_arc(v, u);
  }
  for (int k = 0; k < n; ++k) {
    add_arc(k, root);
    add_arc(root, k);
  }
  std::vector<int> u_var(n + 1);
  u_var[root] = b.add_var("u_ROOT", Rational(0), Rational(n), VarKind::Integer,
                          {VarRole::Kind::LabelU, root, -1});
  for (int i = 0; i < n; ++i) {
    u_var[i] = b.add_var("u_" + ext(grid, i), Rational(0), Rational(n),
                         VarKind::Integer, {VarRole::Kind::LabelU, i, -1});
  }

  // Subtour elimination rows: one per arc, lifted with the reverse arc.
  const Rational big(n), rev(n - 2), rhs(n - 1);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto [i, j] = arcs[k];
    b.add_row("a" + std::to_string(k),
              {{f.at({i, j}), big},
               {f.at({j, i}), rev},
               {u_var[i], Rational(1)},
               {u_var[j], Rational(-1)}},
              Sense::LessEq, rhs);
  }
  // Exactly one outgoing arc per bus.
  for (int i = 0; i < n; ++i) {
    std::vector<LinearTerm> terms;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (pairs[p].first == i) terms.push_back({f.at({i, pairs[p].second}), Rational(1)});
      if (pairs[p].second == i) terms.push_back({f.at({i, pairs[p].first}), Rational(1)});
    }
    terms.push_back({f.at({i, root}), Rational(1)});
    b.add_row("o" + ext(grid, i), std::move(terms), Sense::Equal, Rational(1));
  }
  // At least one arc into the root.
  {
    std::vector<LinearTerm> terms;
    for (int k = 0; k < n; ++k) terms.push_back({f.at({k, root}), Rational(1)});
    b.add_row("rin", std::move(terms), Sense::GreaterEq, Rational(1));
  }
  // Total arc count.
  {
    std::vector<LinearTerm> terms;
    for (auto [i, j] : arcs) terms.push_back({f.at({i, j}), Rational(1)});
    b.add_row("tsz", std::move(terms), Sense::Equal, Rational(n));
  }
  // Reference arcs need PMU coverage.
  for (int i = 0; i < n; ++i) {
    std::vector<LinearTerm> terms{{f.at({root, i}), Rational(1)},
                                  {f.at({i, root}), Rational(1)},
                                  {z[i], Rational(-1)}};
    for (int j : grid.neighbors(i)) terms.push_back({z[j], Rational(-1)});
    b.add_row("p" + ext(grid, i), std::move(terms), Sense::LessEq, Rational(0));
  }
  // Grid arcs need a protected line or an assigned protected injection.
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [u, v] = pairs[p];
    std::vector<LinearTerm> terms{{f.at({u, v}), Rational(1)},
                                  {f.at({v, u}), Rational(1)}};
    for (int e : pair_lines[p]) {
      terms.push_back({y[e], Rational(-1)});
      terms.push_back({w[e][0], Rational(-1)});
      terms.push_back({w[e][1], Rational(-1)});
    }
    b.add_row("e" + std::to_string(p), std::move(terms), Sense::LessEq,
              Rational(0));
  }
  // Each protected injection is assigned to at most one incident line.
  for (int i = 0; i < n; ++i) {
    std::vector<LinearTerm> terms;
    for (int e : grid.incident_lines(i)) {
      auto [eu, ev] = grid.line(e);
      terms.push_back({w[e][eu == i ? 0 : 1], Rational(1)});
    }
    terms.push_back({x[i], Rational(-1)});
    b.add_row("g" + ext(grid, i), std::move(terms), Sense::LessEq, Rational(0));
  }

  for (int i : config.measured_injections) {
    Cost c = config.cost_injection.at(i);
    if (c) b.model.objective.push_back({x[i], Rational(c)});
  }
  for (int e : config.measured_lines) {
    Cost c = config.cost_line.at(e);
    if (c) b.model.objective.push_back({y[e], Rational(c)});
  }
  for (int k : config.pmu_buses) {
    Cost c = config.cost_pmu.at(k);
    if (c) b.model.objective.push_back({z[k], Rational(c)});
  }

  b.model.index_names();
  return std::move(b.model);
}

LinearModel build_mtz_mixed(const Grid& grid, const MeasurementConfig& config) {
  LinearModel model = build_mtz_full(grid, config);
  model.tag = "mtz-mixed";
  for (auto& v : model.variables) {
    switch (v.role.kind) {
      case VarRole::Kind::InjectionX:
      case VarRole::Kind::LineY:
      case VarRole::Kind::EdgeAssignW:
      case VarRole::Kind::LabelU:
        v.kind = VarKind::Continuous;
        break;
      default:
        break;
    }
  }
  return model;
}

namespace {

void check_domination_preconditions(const Grid& grid,
                                    const MeasurementConfig& config) {
  if (!config.measured_lines.empty()) {
    std::string lines;
    for (int e : config.measured_lines) {
      if (!lines.empty()) lines += ", ";
      lines += grid.line_label(e);
    }
    throw PreconditionError(
        "domination model needs an empty measured line set; measured: " +
        lines);
  }
  if (!grid.connected()) {
    std::string desc;
    for (const auto& comp : grid.components()) {
      desc += " {";
      for (std::size_t k = 0; k < comp.size(); ++k) {
        if (k) desc += ",";
        desc += std::to_string(grid.bus_id(comp[k]));
      }
      desc += "}";
    }
    throw PreconditionError("domination model needs a connected grid; components:" +
                            desc);
  }
}

}  // namespace

LinearModel build_domination(const Grid& grid, const MeasurementConfig& config) {
  validate_config(grid, config);
  check_domination_preconditions(grid, config);
  const int n = grid.bus_count();

  Builder b;
  b.model.tag = "dom";

  std::vector<int> x(n), z(n);
  for (int i = 0; i < n; ++i) {
    Rational ub(contains(config.measured_injections, i) ? 1 : 0);
    x[i] = b.add_var("x_" + ext(grid, i), Rational(0), ub, VarKind::Binary,
                     {VarRole::Kind::InjectionX, i, -1});
  }
  for (int k = 0; k < n; ++k) {
    Rational ub(contains(config.pmu_buses, k) ? 1 : 0);
    z[k] = b.add_var("z_" + ext(grid, k), Rational(0), ub, VarKind::Binary,
                     {VarRole::Kind::PmuZ, k, -1});
  }
  // w_{i,j}: injection j may dominate bus i when j = i or {i,j} is a line.
  std::map<std::pair<int, int>, int> w;
  for (int i = 0; i < n; ++i) {
    w[{i, i}] = b.add_var("w_" + ext(grid, i) + "_" + ext(grid, i), Rational(0),
                          Rational(1), VarKind::Binary,
                          {VarRole::Kind::NodePairW, i, i});
    for (int j : grid.neighbors(i)) {
      w[{i, j}] = b.add_var("w_" + ext(grid, i) + "_" + ext(grid, j),
                            Rational(0), Rational(1), VarKind::Binary,
                            {VarRole::Kind::NodePairW, i, j});
    }
  }

  // Every bus lies in a protected PMU zone or receives an assignment.
  for (int i = 0; i < n; ++i) {
    std::vector<LinearTerm> terms{{z[i], Rational(1)}};
    for (int k : grid.neighbors(i)) terms.push_back({z[k], Rational(1)});
    terms.push_back({w.at({i, i}), Rational(1)});
    for (int j : grid.neighbors(i)) terms.push_back({w.at({i, j}), Rational(1)});
    b.add_row("c" + ext(grid, i), std::move(terms), Sense::GreaterEq,
              Rational(1));
  }
  // An injection dominates at most one bus, and only if protected.
  for (int j = 0; j < n; ++j) {
    std::vector<LinearTerm> terms{{w.at({j, j}), Rational(1)}};
    for (int i : grid.neighbors(j)) terms.push_back({w.at({i, j}), Rational(1)});
    terms.push_back({x[j], Rational(-1)});
    b.add_row("g" + ext(grid, j), std::move(terms), Sense::LessEq, Rational(0));
  }
  // At least one protected PMU; without it the reference node is unreachable.
  {
    std::vector<LinearTerm> terms;
    for (int k : config.pmu_buses) terms.push_back({z[k], Rational(1)});
    if (terms.empty() && n > 0) terms.push_back({z[0], Rational(0)});
    b.add_row("pne", std::move(terms), Sense::GreaterEq, Rational(1));
  }

  for (int i : config.measured_injections) {
    Cost c = config.cost_injection.at(i);
    if (c) b.model.objective.push_back({x[i], Rational(c)});
  }
  for (int k : config.pmu_buses) {
    Cost c = config.cost_pmu.at(k);
    if (c) b.model.objective.push_back({z[k], Rational(c)});
  }

  b.model.index_names();
  return std::move(b.model);
}

LinearModel build_domination_mixed(const Grid& grid,
                                   const MeasurementConfig& config) {
  LinearModel model = build_domination(grid, config);
  model.tag = "dom-mixed";
  for (auto& v : model.variables) {
    if (v.role.kind == VarRole::Kind::InjectionX ||
        v.role.kind == VarRole::Kind::NodePairW) {
      v.kind = VarKind::Continuous;
    }
  }
  return model;
}

}  // namespace ppp
