#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppp/rational.hpp"

namespace ppp {

using BusId = std::int64_t;

/// Undirected multigraph of buses and lines. Buses carry external integer
/// identifiers; everything else in the library works with the internal
/// indices 0..bus_count()-1 (the position in the constructor's bus list).
/// Lines are stored in construction order; parallel lines are kept as
/// distinct entries. Immutable after construction.
class Grid {
public:
  Grid(std::vector<BusId> bus_ids,
       const std::vector<std::pair<BusId, BusId>>& lines,
       std::map<int, Rational> reactance = {});

  int bus_count() const { return static_cast<int>(bus_ids_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }

  BusId bus_id(int index) const { return bus_ids_.at(index); }
  const std::vector<BusId>& bus_ids() const { return bus_ids_; }

  std::optional<int> find_bus(BusId id) const;
  /// Throws ValidationError when the id is unknown.
  int bus_index(BusId id) const;

  /// Endpoints of line e as internal indices, smaller external id first.
  std::pair<int, int> line(int e) const { return lines_.at(e); }
  const std::vector<std::pair<int, int>>& lines() const { return lines_; }

  /// Line indices incident to a bus, ascending.
  const std::vector<int>& incident_lines(int bus) const {
    return incident_.at(bus);
  }
  int degree(int bus) const { return static_cast<int>(incident_.at(bus).size()); }

  /// Distinct neighboring bus indices, ascending (parallel lines deduped).
  const std::vector<int>& neighbors(int bus) const { return neighbors_.at(bus); }

  /// Per-line reactance (positive, per unit) when known.
  const std::map<int, Rational>& reactance() const { return reactance_; }

  bool connected() const;
  /// Connected components as sorted lists of internal indices.
  std::vector<std::vector<int>> components() const;

  /// "<i>_<j>" with the smaller external id first; parallel duplicates past
  /// the first get an occurrence suffix: "1_4", "1_4__2", ...
  std::string line_label(int e) const;

  /// Line indices sorted by (min external id, max external id, index);
  /// the canonical ordering used for serialization and tie-breaking.
  std::vector<int> canonical_line_order() const;

private:
  std::vector<BusId> bus_ids_;
  std::unordered_map<BusId, int> index_of_;
  std::vector<std::pair<int, int>> lines_;  // internal indices
  std::map<int, Rational> reactance_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> neighbors_;
};

/// P(z): the protected buses plus all their neighbors, ascending internal
/// indices. This is the set of buses whose phasors protected PMUs measure.
std::vector<int> pmu_coverage(const Grid& grid,
                              const std::vector<int>& protected_pmus);

/// Signed incidence entries (bus row, line column, +1/-1) with +1 at the
/// endpoint with the smaller internal index.
struct IncidenceEntry {
  int bus;
  int line;
  int sign;
};
std::vector<IncidenceEntry> incidence_matrix(const Grid& grid);

}  // namespace ppp
