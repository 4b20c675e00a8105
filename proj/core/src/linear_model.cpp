#include "ppp/linear_model.hpp"

#include <set>

#include "ppp/errors.hpp"

namespace ppp {

void LinearModel::index_names() {
  name_index_.clear();
  for (int v = 0; v < static_cast<int>(variables.size()); ++v) {
    name_index_[variables[v].name] = v;
  }
}

int LinearModel::var_index(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end()) {
    throw ValidationError("unknown variable '" + name + "'");
  }
  return it->second;
}

bool LinearModel::has_var(const std::string& name) const {
  return name_index_.count(name) > 0;
}

void validate_model(const LinearModel& model) {
  std::set<std::string> names;
  for (const auto& v : model.variables) {
    if (!names.insert(v.name).second) {
      throw ValidationError("duplicate variable name '" + v.name + "'");
    }
    if (v.lower > v.upper) {
      throw ValidationError("empty bound range on '" + v.name + "'");
    }
    if (v.kind == VarKind::Binary &&
        (v.lower < Rational(0) || v.upper > Rational(1))) {
      throw ValidationError("binary variable '" + v.name +
                            "' with bounds outside [0,1]");
    }
  }
  auto check_terms = [&](const std::vector<LinearTerm>& terms,
                         const std::string& where) {
    for (const auto& t : terms) {
      if (t.var < 0 || t.var >= static_cast<int>(model.variables.size())) {
        throw ValidationError("term index out of range in " + where);
      }
    }
  };
  check_terms(model.objective, "objective");
  std::set<std::string> row_names;
  for (const auto& c : model.constraints) {
    if (!row_names.insert(c.name).second) {
      throw ValidationError("duplicate constraint name '" + c.name + "'");
    }
    check_terms(c.terms, "constraint " + c.name);
  }
}

Rational eval_terms(const std::vector<LinearTerm>& terms,
                    const std::vector<Rational>& values) {
  Rational acc(0);
  for (const auto& t : terms) acc += t.coeff * values.at(t.var);
  return acc;
}

bool satisfies_exactly(const LinearModel& model,
                       const std::vector<Rational>& values,
                       std::string* violation) {
  auto fail = [&](const std::string& why) {
    if (violation) *violation = why;
    return false;
  };
  for (std::size_t v = 0; v < model.variables.size(); ++v) {
    const auto& var = model.variables[v];
    if (values[v] < var.lower || values[v] > var.upper) {
      return fail("bound violated on " + var.name);
    }
    if (var.kind != VarKind::Continuous && !is_integral(values[v])) {
      return fail("integrality violated on " + var.name);
    }
  }
  for (const auto& c : model.constraints) {
    Rational lhs = eval_terms(c.terms, values);
    bool ok = (c.sense == Sense::LessEq && lhs <= c.rhs) ||
              (c.sense == Sense::Equal && lhs == c.rhs) ||
              (c.sense == Sense::GreaterEq && lhs >= c.rhs);
    if (!ok) return fail("constraint " + c.name + " violated");
  }
  return true;
}

}  // namespace ppp
