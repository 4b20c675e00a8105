#include "ppp/rank_check.hpp"

#include <random>

#include "ppp/experiment.hpp"
#include "ppp/fp61.hpp"

namespace ppp {

std::vector<std::vector<std::uint64_t>> protection_matrix_fp(
    const Grid& grid, const ProtectionPlan& plan,
    const std::vector<std::uint64_t>& line_weights) {
  const int n = grid.bus_count();
  std::vector<std::vector<std::uint64_t>> rows;

  // Injection row i of A D A^T: sum of incident weights on the diagonal,
  // minus the weight toward each neighboring endpoint.
  for (int i : plan.protected_injections) {
    std::vector<std::uint64_t> row(n, 0);
    for (int e : grid.incident_lines(i)) {
      auto [u, v] = grid.line(e);
      int other = (u == i) ? v : u;
      std::uint64_t d = line_weights.at(e);
      row[i] = fp61::add(row[i], d);
      row[other] = fp61::sub(row[other], d);
    }
    rows.push_back(std::move(row));
  }
  // Line row e of D A^T: +d at the smaller internal endpoint, -d at the
  // larger (the fixed orientation of the incidence matrix).
  for (int e : plan.protected_lines) {
    std::vector<std::uint64_t> row(n, 0);
    auto [u, v] = grid.line(e);
    int lo = std::min(u, v), hi = std::max(u, v);
    row[lo] = line_weights.at(e);
    row[hi] = fp61::sub(0, line_weights.at(e));
    rows.push_back(std::move(row));
  }
  for (int k : pmu_coverage(grid, plan.protected_pmus)) {
    std::vector<std::uint64_t> row(n, 0);
    row[k] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

int rank_fp(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
  int rank = 0;
  const int m = static_cast<int>(rows.size());
  for (int col = 0; col < cols && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint64_t inv = fp61::inv(rows[rank][col]);
    for (int r = rank + 1; r < m; ++r) {
      if (rows[r][col] == 0) continue;
      std::uint64_t factor = fp61::mul(rows[r][col], inv);
      for (int c = col; c < cols; ++c) {
        rows[r][c] = fp61::sub(rows[r][c], fp61::mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

bool algebraic_rank_check(const Grid& grid, const ProtectionPlan& plan,
                          std::uint64_t seed) {
  const int n = grid.bus_count();
  if (n == 0) return true;
  std::mt19937_64 rng(seed);
  int full = 0;
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<std::uint64_t> weights(grid.line_count());
    for (auto& w : weights) w = uniform_below(rng, fp61::kP);
    auto rows = protection_matrix_fp(grid, plan, weights);
    if (rank_fp(rows, n) == n) ++full;
  }
  return full >= 2;
}

std::optional<bool> physical_rank_check(const Grid& grid,
                                        const ProtectionPlan& plan) {
  const int n = grid.bus_count();
  std::vector<std::uint64_t> weights(grid.line_count(), 0);
  std::vector<char> needed(grid.line_count(), 0);
  for (int i : plan.protected_injections) {
    for (int e : grid.incident_lines(i)) needed[e] = 1;
  }
  for (int e : plan.protected_lines) needed[e] = 1;
  for (int e = 0; e < grid.line_count(); ++e) {
    if (!needed[e]) continue;
    auto it = grid.reactance().find(e);
    if (it == grid.reactance().end()) return std::nullopt;
    // Weight = 1/x as a field element.
    std::uint64_t num = static_cast<std::uint64_t>(it->second.numerator());
    std::uint64_t den = static_cast<std::uint64_t>(it->second.denominator());
    weights[e] = fp61::mul(den % fp61::kP, fp61::inv(num % fp61::kP));
  }
  auto rows = protection_matrix_fp(grid, plan, weights);
  return rank_fp(rows, n) == n;
}

}  // namespace ppp
