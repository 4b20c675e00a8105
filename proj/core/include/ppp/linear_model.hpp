#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppp/rational.hpp"

namespace ppp {

enum class VarKind { Binary, Integer, Continuous };
enum class Sense { LessEq, Equal, GreaterEq };

/// What a model variable stands for in the source grid. Node indices use
/// grid.bus_count() for the reference node.
struct VarRole {
  enum class Kind {
    None,
    InjectionX,  // a = bus
    LineY,       // a = line
    PmuZ,        // a = bus
    EdgeAssignW, // a = line, b = assigned bus
    NodePairW,   // a = dominated bus, b = injection bus
    ArcF,        // a = from node, b = to node
    LabelU,      // a = node
  };
  Kind kind = Kind::None;
  int a = -1;
  int b = -1;
};

struct Variable {
  std::string name;
  Rational lower;
  Rational upper;
  VarKind kind = VarKind::Continuous;
  VarRole role;
};

struct LinearTerm {
  int var;
  Rational coeff;
};

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LessEq;
  Rational rhs;
};

/// Solver-agnostic sparse linear program, minimization sense. Variable and
/// constraint order is part of the model (serializers preserve it).
struct LinearModel {
  std::string tag;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<LinearTerm> objective;

  int var_index(const std::string& name) const;
  bool has_var(const std::string& name) const;

  /// Rebuilds the name lookup; builders call this once at the end.
  void index_names();

private:
  std::map<std::string, int> name_index_;
};

/// Checks structural invariants: unique names, valid term indices, lower
/// <= upper, binary bounds within [0,1]. Throws ValidationError.
void validate_model(const LinearModel& model);

Rational eval_terms(const std::vector<LinearTerm>& terms,
                    const std::vector<Rational>& values);

/// Exact satisfaction check of bounds, integrality and all constraints.
/// On failure optionally reports the first violated item.
bool satisfies_exactly(const LinearModel& model,
                       const std::vector<Rational>& values,
                       std::string* violation = nullptr);

}  // namespace ppp
