#include "ppp/grid.hpp"

#include <algorithm>

#include "ppp/dsu.hpp"
#include "ppp/errors.hpp"

namespace ppp {

Grid::Grid(std::vector<BusId> bus_ids,
           const std::vector<std::pair<BusId, BusId>>& lines,
           std::map<int, Rational> reactance)
    : bus_ids_(std::move(bus_ids)), reactance_(std::move(reactance)) {
  index_of_.reserve(bus_ids_.size());
  for (int i = 0; i < static_cast<int>(bus_ids_.size()); ++i) {
    if (!index_of_.emplace(bus_ids_[i], i).second) {
      throw ValidationError("duplicate bus id " + std::to_string(bus_ids_[i]));
    }
  }
  lines_.reserve(lines.size());
  for (const auto& [a, b] : lines) {
    if (a == b) {
      throw ValidationError("self-loop at bus " + std::to_string(a));
    }
    auto ia = index_of_.find(a), ib = index_of_.find(b);
    if (ia == index_of_.end() || ib == index_of_.end()) {
      throw ValidationError("line {" + std::to_string(a) + "," +
                            std::to_string(b) + "} references an unknown bus");
    }
    // Smaller external id first.
    if (a < b) {
      lines_.emplace_back(ia->second, ib->second);
    } else {
      lines_.emplace_back(ib->second, ia->second);
    }
  }
  for (const auto& [e, x] : reactance_) {
    if (e < 0 || e >= line_count()) {
      throw ValidationError("reactance for unknown line index " +
                            std::to_string(e));
    }
    if (x <= Rational(0)) {
      throw ValidationError("non-positive reactance on line " +
                            std::to_string(e));
    }
  }
  incident_.assign(bus_ids_.size(), {});
  neighbors_.assign(bus_ids_.size(), {});
  for (int e = 0; e < line_count(); ++e) {
    incident_[lines_[e].first].push_back(e);
    incident_[lines_[e].second].push_back(e);
    neighbors_[lines_[e].first].push_back(lines_[e].second);
    neighbors_[lines_[e].second].push_back(lines_[e].first);
  }
  for (auto& nb : neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

std::optional<int> Grid::find_bus(BusId id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

int Grid::bus_index(BusId id) const {
  auto idx = find_bus(id);
  if (!idx) throw ValidationError("unknown bus id " + std::to_string(id));
  return *idx;
}

bool Grid::connected() const {
  if (bus_count() == 0) return true;
  DisjointSets dsu(bus_count());
  for (const auto& [u, v] : lines_) dsu.unite(u, v);
  return dsu.components() == 1;
}

std::vector<std::vector<int>> Grid::components() const {
  DisjointSets dsu(bus_count());
  for (const auto& [u, v] : lines_) dsu.unite(u, v);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < bus_count(); ++i) groups[dsu.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::string Grid::line_label(int e) const {
  auto [u, v] = line(e);
  BusId a = bus_id(u), b = bus_id(v);
  if (a > b) std::swap(a, b);
  int occurrence = 1;
  for (int k = 0; k < e; ++k) {
    auto [x, y] = line(k);
    BusId c = bus_id(x), d = bus_id(y);
    if (c > d) std::swap(c, d);
    if (c == a && d == b) ++occurrence;
  }
  std::string label = std::to_string(a) + "_" + std::to_string(b);
  if (occurrence > 1) label += "__" + std::to_string(occurrence);
  return label;
}

std::vector<int> Grid::canonical_line_order() const {
  std::vector<int> order(line_count());
  for (int e = 0; e < line_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    auto [ua, va] = line(a);
    auto [ub, vb] = line(b);
    BusId a0 = std::min(bus_id(ua), bus_id(va));
    BusId a1 = std::max(bus_id(ua), bus_id(va));
    BusId b0 = std::min(bus_id(ub), bus_id(vb));
    BusId b1 = std::max(bus_id(ub), bus_id(vb));
    return std::tie(a0, a1) < std::tie(b0, b1);
  });
  return order;
}

std::vector<int> pmu_coverage(const Grid& grid,
                              const std::vector<int>& protected_pmus) {
  std::vector<char> covered(grid.bus_count(), 0);
  for (int k : protected_pmus) {
    covered.at(k) = 1;
    for (int nb : grid.neighbors(k)) covered[nb] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < grid.bus_count(); ++i) {
    if (covered[i]) out.push_back(i);
  }
  return out;
}

std::vector<IncidenceEntry> incidence_matrix(const Grid& grid) {
  std::vector<IncidenceEntry> entries;
  entries.reserve(2 * grid.line_count());
  for (int e = 0; e < grid.line_count(); ++e) {
    auto [u, v] = grid.line(e);
    int lo = std::min(u, v), hi = std::max(u, v);
    entries.push_back({lo, e, +1});
    entries.push_back({hi, e, -1});
  }
  return entries;
}

}  // namespace ppp
