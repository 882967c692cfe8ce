#ifndef PWT_MIP_HPP
#define PWT_MIP_HPP

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pwt/errors.hpp"

namespace pwt {

enum class VarKind { Binary, Continuous };
enum class Sense { LessEqual, Equal, GreaterEqual };

using VarId = std::size_t;

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct LinearTerm {
  double coefficient = 0.0;
  VarId variable = 0;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;  // coefficients pre-merged per variable
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

/// Solver-agnostic mixed 0-1 linear model, always maximizing. Variables and
/// constraints keep insertion order; the LP writer depends on that for
/// byte-deterministic output.
class MipModel {
 public:
  VarId add_binary(const std::string& name);
  VarId add_continuous(const std::string& name, double lower, double upper);
  VarId add_free(const std::string& name);
  void add_constraint(const std::string& name, std::vector<LinearTerm> terms,
                      Sense sense, double rhs);
  void set_objective(std::vector<LinearTerm> terms, double constant = 0.0);

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<LinearTerm>& objective_terms() const { return objective_; }
  // LP files cannot carry an objective constant; it travels as a comment and
  // in the JSON sidecar, and solution readers add it back.
  double objective_constant() const { return objective_constant_; }
  VarId variable_id(const std::string& name) const;
  bool has_variable(const std::string& name) const;

 private:
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  std::vector<LinearTerm> objective_;
  double objective_constant_ = 0.0;
  std::unordered_map<std::string, VarId> var_index_;
  std::unordered_map<std::string, std::size_t> con_index_;

  VarId add_variable(Variable v);
};

/// CPLEX-LP dialect: Maximize / Subject To / Bounds / Binaries / End, one
/// constraint per line, 17-significant-digit coefficients. Same model,
/// identical bytes.
void write_lp(const MipModel& model, std::ostream& out);
std::string write_lp_string(const MipModel& model);

/// Round-trip "%.17g" formatting used everywhere a real lands in a file.
std::string format_coefficient(double value);

}  // namespace pwt

#endif
