#pragma once

#include <string>

#include "ppp/grid.hpp"

namespace ppp {

/// Builds a Grid from MATPOWER M-file text. Only the `mpc.bus` block
/// (column 1: bus id) and `mpc.branch` block (columns 1,2: endpoints,
/// column 4: reactance, used when positive) are read; everything else,
/// MATLAB comments and `...` continuations are tolerated and ignored.
/// Duplicate {fbus,tbus} rows are kept as parallel lines.
Grid parse_matpower(const std::string& text);

}  // namespace ppp
