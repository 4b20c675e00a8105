#include "ppp/model_io.hpp"

#include <algorithm>
#include <sstream>

#include "ppp/errors.hpp"

namespace ppp {

namespace {

constexpr std::size_t kWrapColumn = 200;

std::string term_text(const LinearTerm& t, const LinearModel& model,
                      bool first) {
  Rational c = t.coeff;
  std::string sign = c < Rational(0) ? "-" : "+";
  if (c < Rational(0)) c = -c;
  std::string out;
  if (first) {
    if (sign == "-") out += "- ";
  } else {
    out += " " + sign + " ";
  }
  if (c != Rational(1)) out += decimal_string(c) + " ";
  out += model.variables[t.var].name;
  return out;
}

void append_terms(std::string& out, const std::vector<LinearTerm>& terms,
                  const LinearModel& model) {
  std::size_t column = out.size() - out.rfind('\n') - 1;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string text = term_text(terms[k], model, k == 0);
    if (column + text.size() > kWrapColumn && k > 0) {
      out += "\n   ";
      column = 3;
      if (text[0] == ' ') text.erase(0, 1);
    }
    out += text;
    column += text.size();
  }
}

}  // namespace

std::string write_lp(const LinearModel& model) {
  validate_model(model);
  std::string out = "Minimize\n obj: ";
  if (model.objective.empty() && !model.variables.empty()) {
    out += "0 " + model.variables[0].name;
  } else {
    append_terms(out, model.objective, model);
  }
  out += "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out += " " + c.name + ": ";
    append_terms(out, c.terms, model);
    switch (c.sense) {
      case Sense::LessEq: out += " <= "; break;
      case Sense::Equal: out += " = "; break;
      case Sense::GreaterEq: out += " >= "; break;
    }
    out += decimal_string(c.rhs) + "\n";
  }

  std::string bounds;
  for (const auto& v : model.variables) {
    bool default_binary = v.kind == VarKind::Binary && v.lower == Rational(0) &&
                          v.upper == Rational(1);
    if (default_binary) continue;
    if (v.lower == v.upper) {
      bounds += " " + v.name + " = " + decimal_string(v.lower) + "\n";
    } else if (v.lower == Rational(0)) {
      bounds += " " + v.name + " <= " + decimal_string(v.upper) + "\n";
    } else {
      bounds += " " + decimal_string(v.lower) + " <= " + v.name + " <= " +
                decimal_string(v.upper) + "\n";
    }
  }
  if (!bounds.empty()) out += "Bounds\n" + bounds;

  auto name_list = [&](VarKind kind) {
    std::string section;
    std::string line;
    for (const auto& v : model.variables) {
      if (v.kind != kind) continue;
      if (line.size() + v.name.size() + 1 > kWrapColumn) {
        section += line + "\n";
        line.clear();
      }
      line += " " + v.name;
    }
    if (!line.empty()) section += line + "\n";
    return section;
  };
  std::string binaries = name_list(VarKind::Binary);
  if (!binaries.empty()) out += "Binaries\n" + binaries;
  std::string generals = name_list(VarKind::Integer);
  if (!generals.empty()) out += "Generals\n" + generals;
  out += "End\n";
  return out;
}

namespace {

std::string mps_name(const std::string& name) {
  if (name.size() > 8) {
    throw FormatError("name '" + name + "' exceeds the 8-character MPS limit");
  }
  return name;
}

std::string mps_number(const Rational& value) {
  std::string s = decimal_string(value);
  if (s.size() > 12) {
    throw FormatError("value " + s + " exceeds the 12-character MPS field");
  }
  return s;
}

/// A fixed-column MPS line: field1 at column 2, field2 at 5, field3 at 15,
/// field4 at 25, field5 at 40, field6 at 50 (1-based).
std::string mps_line(const std::string& f1, const std::string& f2,
                     const std::string& f3 = "", const std::string& f4 = "",
                     const std::string& f5 = "", const std::string& f6 = "") {
  static constexpr std::size_t starts[6] = {1, 4, 14, 24, 39, 49};
  const std::string* fields[6] = {&f1, &f2, &f3, &f4, &f5, &f6};
  std::string line;
  for (int k = 0; k < 6; ++k) {
    if (fields[k]->empty()) continue;
    if (line.size() > starts[k]) line += " ";
    while (line.size() < starts[k]) line += " ";
    line += *fields[k];
  }
  return line + "\n";
}

}  // namespace

std::string write_mps(const LinearModel& model) {
  validate_model(model);
  std::string out;
  out += mps_line("NAME", "", "PPPMODEL");
  out += "ROWS\n";
  out += mps_line("N", "obj");
  for (const auto& c : model.constraints) {
    const char* sense = c.sense == Sense::LessEq   ? "L"
                        : c.sense == Sense::Equal ? "E"
                                                  : "G";
    out += mps_line(sense, mps_name(c.name));
  }

  // Column entries grouped per variable, in model order.
  std::vector<std::vector<std::pair<std::string, Rational>>> entries(
      model.variables.size());
  for (const auto& t : model.objective) {
    entries[t.var].push_back({"obj", t.coeff});
  }
  for (const auto& c : model.constraints) {
    for (const auto& t : c.terms) {
      entries[t.var].push_back({c.name, t.coeff});
    }
  }
  out += "COLUMNS\n";
  bool in_integer_block = false;
  int marker_count = 0;
  auto marker = [&](const char* kind) {
    out += mps_line("", "MARK" + std::to_string(marker_count++), "'MARKER'", "",
                    std::string("'") + kind + "'");
  };
  for (std::size_t v = 0; v < model.variables.size(); ++v) {
    const auto& var = model.variables[v];
    bool integral = var.kind != VarKind::Continuous;
    if (integral && !in_integer_block) {
      marker("INTORG");
      in_integer_block = true;
    } else if (!integral && in_integer_block) {
      marker("INTEND");
      in_integer_block = false;
    }
    auto& list = entries[v];
    if (list.empty()) list.push_back({"obj", Rational(0)});
    const std::string name = mps_name(var.name);
    for (std::size_t k = 0; k < list.size(); k += 2) {
      if (k + 1 < list.size()) {
        out += mps_line("", name, mps_name(list[k].first),
                        mps_number(list[k].second), mps_name(list[k + 1].first),
                        mps_number(list[k + 1].second));
      } else {
        out += mps_line("", name, mps_name(list[k].first),
                        mps_number(list[k].second));
      }
    }
  }
  if (in_integer_block) marker("INTEND");

  out += "RHS\n";
  {
    std::vector<std::pair<std::string, Rational>> rhs;
    for (const auto& c : model.constraints) {
      if (c.rhs != Rational(0)) rhs.push_back({c.name, c.rhs});
    }
    for (std::size_t k = 0; k < rhs.size(); k += 2) {
      if (k + 1 < rhs.size()) {
        out += mps_line("", "RHS", mps_name(rhs[k].first),
                        mps_number(rhs[k].second), mps_name(rhs[k + 1].first),
                        mps_number(rhs[k + 1].second));
      } else {
        out += mps_line("", "RHS", mps_name(rhs[k].first),
                        mps_number(rhs[k].second));
      }
    }
  }

  out += "BOUNDS\n";
  for (const auto& var : model.variables) {
    const std::string name = mps_name(var.name);
    if (var.lower == var.upper) {
      out += mps_line("FX", "BND", name, mps_number(var.lower));
    } else if (var.kind == VarKind::Binary) {
      out += mps_line("BV", "BND", name);
    } else if (var.kind == VarKind::Integer) {
      if (var.lower != Rational(0)) {
        out += mps_line("LI", "BND", name, mps_number(var.lower));
      }
      out += mps_line("UI", "BND", name, mps_number(var.upper));
    } else {
      if (var.lower != Rational(0)) {
        out += mps_line("LO", "BND", name, mps_number(var.lower));
      }
      out += mps_line("UP", "BND", name, mps_number(var.upper));
    }
  }
  out += "ENDATA\n";
  return out;
}

Solution read_solution(const LinearModel& model, const std::string& text) {
  Solution solution;
  for (const auto& v : model.variables) solution.values[v.name] = Rational(0);

  std::istringstream stream(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, value;
    if (!(fields >> name)) continue;
    if (!(fields >> value)) {
      throw ParseError("missing value for '" + name + "'", lineno);
    }
    if (!model.has_var(name)) {
      throw ValidationError("solution references unknown variable '" + name +
                            "'");
    }
    solution.values[name] = parse_decimal(value);
  }

  const Rational tol(1, 1000000);
  std::vector<Rational> by_index(model.variables.size());
  for (std::size_t v = 0; v < model.variables.size(); ++v) {
    const auto& var = model.variables[v];
    Rational value = solution.values.at(var.name);
    if (value < var.lower - tol || value > var.upper + tol) {
      throw ValidationError("value of " + var.name + " violates its bounds");
    }
    if (var.kind != VarKind::Continuous) {
      Rational nearest(rational_round(value));
      Rational gap = value - nearest;
      if (gap < -tol || gap > tol) {
        throw ValidationError("value of " + var.name +
                              " violates integrality beyond 1e-6");
      }
    }
    by_index[v] = value;
  }
  for (const auto& c : model.constraints) {
    Rational lhs = eval_terms(c.terms, by_index);
    bool ok = true;
    switch (c.sense) {
      case Sense::LessEq: ok = lhs <= c.rhs + tol; break;
      case Sense::GreaterEq: ok = lhs >= c.rhs - tol; break;
      case Sense::Equal: ok = lhs >= c.rhs - tol && lhs <= c.rhs + tol; break;
    }
    if (!ok) {
      throw ValidationError("infeasible solution: constraint " + c.name +
                            " violated");
    }
  }
  return solution;
}

ProtectionPlan extract_plan(const LinearModel& model, const Solution& solution) {
  ProtectionPlan plan;
  const Rational half(1, 2);
  for (const auto& var : model.variables) {
    auto it = solution.values.find(var.name);
    Rational value = it == solution.values.end() ? Rational(0) : it->second;
    if (value <= half) continue;
    switch (var.role.kind) {
      case VarRole::Kind::InjectionX:
        plan.protected_injections.push_back(var.role.a);
        break;
      case VarRole::Kind::LineY:
        plan.protected_lines.push_back(var.role.a);
        break;
      case VarRole::Kind::PmuZ:
        plan.protected_pmus.push_back(var.role.a);
        break;
      default:
        break;
    }
  }
  std::sort(plan.protected_injections.begin(), plan.protected_injections.end());
  std::sort(plan.protected_lines.begin(), plan.protected_lines.end());
  std::sort(plan.protected_pmus.begin(), plan.protected_pmus.end());
  return plan;
}

}  // namespace ppp
