#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppp/grid.hpp"
#include "ppp/instance.hpp"

namespace ppp {

/// Rows of the protected measurement matrix over F_p for a given diagonal
/// of line weights d (one entry per line): one weighted-Laplacian row per
/// protected injection, one weighted incidence row per protected line and
/// one identity row per PMU-covered bus.
std::vector<std::vector<std::uint64_t>> protection_matrix_fp(
    const Grid& grid, const ProtectionPlan& plan,
    const std::vector<std::uint64_t>& line_weights);

/// In-place Gaussian elimination rank over F_p (exact).
int rank_fp(std::vector<std::vector<std::uint64_t>>& rows, int cols);

/// Algebraic observability test: draws three independent random diagonals
/// over F_p (p = 2^61 - 1) from the seeded generator, checks whether the
/// protected measurement matrix has full column rank, and reports the
/// majority verdict. A rank-deficient protected system is never reported
/// observable; an observable one is misjudged with probability bounded by
/// the Schwartz-Zippel ratio (degree/p per draw), which is negligible.
bool algebraic_rank_check(const Grid& grid, const ProtectionPlan& plan,
                          std::uint64_t seed);

/// Same test with the physical line weights (reciprocal reactances mapped
/// into F_p) instead of random ones. Informational: a specific parameter
/// choice can be degenerate even when the system is generically
/// observable. Empty when a needed reactance is missing.
std::optional<bool> physical_rank_check(const Grid& grid,
                                        const ProtectionPlan& plan);

}  // namespace ppp
