#include "ppp/instance.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "ppp/errors.hpp"

namespace ppp {

using nlohmann::json;

namespace {

bool sorted_unique(const std::vector<int>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] >= v[k]) return false;
  }
  return true;
}

void check_set(const std::vector<int>& set, int limit, const char* what) {
  if (!sorted_unique(set)) {
    throw ValidationError(std::string(what) + " must be sorted and duplicate-free");
  }
  if (!set.empty() && (set.front() < 0 || set.back() >= limit)) {
    throw ValidationError(std::string(what) + " contains an out-of-range index");
  }
}

void check_costs(const std::map<int, Cost>& costs, const std::vector<int>& set,
                 const char* what) {
  for (const auto& [k, c] : costs) {
    if (!std::binary_search(set.begin(), set.end(), k)) {
      throw ValidationError(std::string(what) + ": cost for entity " +
                            std::to_string(k) + " outside its measured set");
    }
    if (c < 0) {
      throw ValidationError(std::string(what) + ": negative cost");
    }
  }
  if (costs.size() != set.size()) {
    throw ValidationError(std::string(what) +
                          ": cost map must cover the measured set exactly");
  }
}

void check_subset(const std::vector<int>& sub, const std::vector<int>& super,
                  const char* what) {
  if (!sorted_unique(sub)) {
    throw ValidationError(std::string(what) + " must be sorted and duplicate-free");
  }
  for (int v : sub) {
    if (!std::binary_search(super.begin(), super.end(), v)) {
      throw ValidationError(std::string(what) + ": entity " + std::to_string(v) +
                            " is not measured");
    }
  }
}

}  // namespace

void validate_config(const Grid& grid, const MeasurementConfig& config) {
  check_set(config.measured_injections, grid.bus_count(), "M_I");
  check_set(config.measured_lines, grid.line_count(), "M_L");
  check_set(config.pmu_buses, grid.bus_count(), "M_P");
  check_costs(config.cost_injection, config.measured_injections, "c_I");
  check_costs(config.cost_line, config.measured_lines, "c_L");
  check_costs(config.cost_pmu, config.pmu_buses, "c_P");
}

void validate_plan(const Grid& grid, const MeasurementConfig& config,
                   const ProtectionPlan& plan) {
  (void)grid;
  check_subset(plan.protected_injections, config.measured_injections,
               "protected injections");
  check_subset(plan.protected_lines, config.measured_lines, "protected lines");
  check_subset(plan.protected_pmus, config.pmu_buses, "protected PMUs");
}

Cost plan_cost(const MeasurementConfig& config, const ProtectionPlan& plan) {
  Cost total = 0;
  for (int i : plan.protected_injections) total += config.cost_injection.at(i);
  for (int e : plan.protected_lines) total += config.cost_line.at(e);
  for (int k : plan.protected_pmus) total += config.cost_pmu.at(k);
  return total;
}

namespace {

std::vector<int> parse_bus_set(const json& arr, const Grid& grid,
                               const char* what) {
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ValidationError(std::string(what) + ": bus ids must be integers");
    }
    auto idx = grid.find_bus(v.get<BusId>());
    if (!idx) {
      throw ValidationError(std::string(what) + ": unknown bus " +
                            v.dump());
    }
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, Cost> parse_bus_costs(const json& obj, const Grid& grid,
                                    const char* what) {
  std::map<int, Cost> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    BusId id = 0;
    try {
      id = std::stoll(it.key());
    } catch (...) {
      throw ValidationError(std::string(what) + ": non-integer key '" +
                            it.key() + "'");
    }
    auto idx = grid.find_bus(id);
    if (!idx) {
      throw ValidationError(std::string(what) + ": unknown bus " + it.key());
    }
    if (!it.value().is_number_integer()) {
      throw ValidationError(std::string(what) + ": costs must be integers");
    }
    out[*idx] = it.value().get<Cost>();
  }
  return out;
}

}  // namespace

Instance load_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("buses") || !doc.contains("lines")) {
    throw ParseError("instance must be an object with 'buses' and 'lines'");
  }

  std::vector<BusId> bus_ids;
  for (const auto& v : doc["buses"]) {
    if (!v.is_number_integer()) {
      throw ValidationError("buses must be integers");
    }
    bus_ids.push_back(v.get<BusId>());
  }
  std::vector<std::pair<BusId, BusId>> lines;
  for (const auto& pair : doc["lines"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError("each line must be a [i,j] pair");
    }
    lines.emplace_back(pair[0].get<BusId>(), pair[1].get<BusId>());
  }
  std::map<int, Rational> reactance;
  if (doc.contains("reactance")) {
    const auto& arr = doc["reactance"];
    if (!arr.is_array() || arr.size() != lines.size()) {
      throw ValidationError("reactance must be an array parallel to lines");
    }
    for (std::size_t e = 0; e < arr.size(); ++e) {
      if (arr[e].is_null()) continue;
      if (arr[e].is_string()) {
        reactance[static_cast<int>(e)] = parse_decimal(arr[e].get<std::string>());
      } else {
        reactance[static_cast<int>(e)] = parse_decimal(arr[e].dump());
      }
    }
  }
  Grid grid(std::move(bus_ids), lines, std::move(reactance));

  MeasurementConfig config;
  if (doc.contains("M_I")) {
    config.measured_injections = parse_bus_set(doc["M_I"], grid, "M_I");
  }
  if (doc.contains("M_P")) {
    config.pmu_buses = parse_bus_set(doc["M_P"], grid, "M_P");
  }
  if (doc.contains("M_L")) {
    for (const auto& v : doc["M_L"]) {
      if (!v.is_number_integer() || v.get<int>() < 0 ||
          v.get<int>() >= grid.line_count()) {
        throw ValidationError("M_L: line index out of range");
      }
      config.measured_lines.push_back(v.get<int>());
    }
    std::sort(config.measured_lines.begin(), config.measured_lines.end());
  }
  if (doc.contains("c_I")) {
    config.cost_injection = parse_bus_costs(doc["c_I"], grid, "c_I");
  }
  if (doc.contains("c_P")) {
    config.cost_pmu = parse_bus_costs(doc["c_P"], grid, "c_P");
  }
  if (doc.contains("c_L")) {
    for (auto it = doc["c_L"].begin(); it != doc["c_L"].end(); ++it) {
      int e = 0;
      try {
        e = std::stoi(it.key());
      } catch (...) {
        throw ValidationError("c_L: non-integer key '" + it.key() + "'");
      }
      if (e < 0 || e >= grid.line_count()) {
        throw ValidationError("c_L: line index out of range");
      }
      if (!it.value().is_number_integer()) {
        throw ValidationError("c_L: costs must be integers");
      }
      config.cost_line[e] = it.value().get<Cost>();
    }
  }

  validate_config(grid, config);
  return Instance{std::move(grid), std::move(config)};
}

std::string save_instance(const Instance& instance) {
  const Grid& grid = instance.grid;
  validate_config(grid, instance.config);

  // Canonical line order with the inverse map for line-indexed data.
  std::vector<int> order = grid.canonical_line_order();
  std::vector<int> new_index(grid.line_count());
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    new_index[order[pos]] = pos;
  }

  json doc;
  doc["buses"] = grid.bus_ids();
  json lines = json::array();
  for (int e : order) {
    auto [u, v] = grid.line(e);
    BusId a = grid.bus_id(u), b = grid.bus_id(v);
    if (a > b) std::swap(a, b);
    lines.push_back({a, b});
  }
  doc["lines"] = lines;
  if (!grid.reactance().empty()) {
    json xs = json::array();
    for (int e : order) {
      auto it = grid.reactance().find(e);
      if (it == grid.reactance().end()) {
        xs.push_back(nullptr);
      } else {
        xs.push_back(decimal_string(it->second));
      }
    }
    doc["reactance"] = xs;
  }

  json mi = json::array(), mp = json::array(), ml = json::array();
  for (int i : instance.config.measured_injections) mi.push_back(grid.bus_id(i));
  for (int k : instance.config.pmu_buses) mp.push_back(grid.bus_id(k));
  std::vector<int> ml_new;
  for (int e : instance.config.measured_lines) ml_new.push_back(new_index[e]);
  std::sort(ml_new.begin(), ml_new.end());
  for (int e : ml_new) ml.push_back(e);
  doc["M_I"] = mi;
  doc["M_L"] = ml;
  doc["M_P"] = mp;

  json ci = json::object(), cl = json::object(), cp = json::object();
  for (const auto& [i, c] : instance.config.cost_injection) {
    ci[std::to_string(grid.bus_id(i))] = c;
  }
  for (const auto& [e, c] : instance.config.cost_line) {
    cl[std::to_string(new_index[e])] = c;
  }
  for (const auto& [k, c] : instance.config.cost_pmu) {
    cp[std::to_string(grid.bus_id(k))] = c;
  }
  doc["c_I"] = ci;
  doc["c_L"] = cl;
  doc["c_P"] = cp;

  return doc.dump(2) + "\n";
}

std::string plan_to_json(const Grid& grid, const ProtectionPlan& plan) {
  json doc;
  json inj = json::array(), lns = json::array(), pmus = json::array();
  for (int i : plan.protected_injections) inj.push_back(grid.bus_id(i));
  for (int e : plan.protected_lines) {
    auto [u, v] = grid.line(e);
    BusId a = grid.bus_id(u), b = grid.bus_id(v);
    if (a > b) std::swap(a, b);
    lns.push_back({a, b});
  }
  for (int k : plan.protected_pmus) pmus.push_back(grid.bus_id(k));
  doc["protected_injections"] = inj;
  doc["protected_lines"] = lns;
  doc["protected_pmus"] = pmus;
  return doc.dump(2) + "\n";
}

ProtectionPlan plan_from_json(const Grid& grid, const MeasurementConfig& config,
                              const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  ProtectionPlan plan;
  if (doc.contains("protected_injections")) {
    plan.protected_injections =
        parse_bus_set(doc["protected_injections"], grid, "protected_injections");
  }
  if (doc.contains("protected_pmus")) {
    plan.protected_pmus =
        parse_bus_set(doc["protected_pmus"], grid, "protected_pmus");
  }
  if (doc.contains("protected_lines")) {
    std::set<int> chosen;
    for (const auto& pair : doc["protected_lines"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ValidationError("protected_lines entries must be [i,j] pairs");
      }
      int u = grid.bus_index(pair[0].get<BusId>());
      int v = grid.bus_index(pair[1].get<BusId>());
      int found = -1;
      for (int e : config.measured_lines) {
        auto [a, b] = grid.line(e);
        bool match = (a == u && b == v) || (a == v && b == u);
        if (match && !chosen.count(e)) {
          found = e;
          break;
        }
      }
      if (found < 0) {
        throw ValidationError("protected_lines: no unprotected measured line " +
                              pair.dump());
      }
      chosen.insert(found);
    }
    plan.protected_lines.assign(chosen.begin(), chosen.end());
  }
  validate_plan(grid, config, plan);
  return plan;
}

}  // namespace ppp
