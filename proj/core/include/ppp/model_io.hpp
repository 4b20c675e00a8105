#pragma once

#include <string>

#include "ppp/instance.hpp"
#include "ppp/linear_model.hpp"

namespace ppp {

/// Values for every model variable (unmentioned ones default to 0).
struct Solution {
  std::map<std::string, Rational> values;
};

/// CPLEX-LP text. Deterministic: variables, constraints and terms appear
/// in model order; rationals print as their shortest exact decimal when
/// terminating, else with 17 significant digits.
std::string write_lp(const LinearModel& model);

/// Fixed-column MPS text. Names are limited to 8 characters and numbers
/// to 12 (FormatError beyond); every integer variable carries an explicit
/// bound entry so readers cannot disagree on defaults.
std::string write_mps(const LinearModel& model);

/// Reads `<name> <value>` lines ('#' starts a comment). Unknown names are
/// errors; missing variables default to 0. The assignment must respect
/// bounds and integrality within 1e-6 and satisfy every constraint within
/// 1e-6, otherwise a ValidationError describes the first violation.
Solution read_solution(const LinearModel& model, const std::string& text);

/// Thresholds protection variables at 1/2 using the model's role index.
ProtectionPlan extract_plan(const LinearModel& model, const Solution& solution);

}  // namespace ppp
