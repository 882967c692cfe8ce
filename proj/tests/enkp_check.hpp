// Shared helper: extend a plan to a full ENKP variable assignment via the
// velocity equalities, then check constraints and recover the objective.
#ifndef PWT_TESTS_ENKP_CHECK_HPP
#define PWT_TESTS_ENKP_CHECK_HPP

#include <cmath>
#include <map>
#include <string>

#include "pwt/enkp.hpp"
#include "pwt/mip.hpp"
#include "pwt/model.hpp"
#include "pwt/preprocess.hpp"

namespace pwt::testing {

struct EnkpAssignment {
  std::map<std::string, double> values;
  double objective = 0.0;        // model objective incl. constant
  double max_violation = 0.0;    // worst constraint violation
};

// The plan covers the full instance and must select all compulsory items and
// no discarded ones.
inline EnkpAssignment enkp_assignment_for_plan(const MipModel& model,
                                               const Instance& instance,
                                               const PreprocessReport& report,
                                               const PackingPlan& plan) {
  EnkpAssignment out;
  auto name_of = [&](VarId id) { return model.variables()[id].name; };

  for (std::size_t g : report.remaining) {
    const Item& it = instance.item(g);
    out.values["x_" + std::to_string(it.city) + "_" + std::to_string(it.slot)] =
        plan.selected(g) ? 1.0 : 0.0;
  }

  // Solve each velocity equality for y_i: with z = x * y_i, the row reads
  // (coef_y + sum of z-coefficients over selected items) * y_i = rhs.
  for (int i = 1; i <= instance.num_legs(); ++i) {
    const std::string yn = "y_" + std::to_string(i);
    const LinearConstraint* row = nullptr;
    for (const LinearConstraint& c : model.constraints())
      if (c.name == "vel_" + std::to_string(i)) row = &c;
    if (row == nullptr) throw Error("missing velocity row for leg " + std::to_string(i));
    double coef = 0.0;
    for (const LinearTerm& t : row->terms) {
      const std::string& vn = name_of(t.variable);
      if (vn == yn)
        coef += t.coefficient;
      else if (vn.rfind("z_", 0) == 0) {
        const std::size_t second = vn.find('_', 2);
        const std::string x_part = "x" + vn.substr(second);
        coef += t.coefficient * out.values.at(x_part);
      } else {
        throw Error("unexpected variable in velocity row: " + vn);
      }
    }
    out.values[yn] = row->rhs / coef;
  }

  // z_{i}_{j}_{k} = x_{j}_{k} * y_i
  for (const Variable& v : model.variables()) {
    if (v.name.rfind("z_", 0) != 0) continue;
    const std::size_t first = v.name.find('_');
    const std::size_t second = v.name.find('_', first + 1);
    const std::string i_part = v.name.substr(first + 1, second - first - 1);
    const std::string x_part = "x" + v.name.substr(second);
    out.values[v.name] = out.values.at(x_part) * out.values.at("y_" + i_part);
  }

  for (const LinearConstraint& c : model.constraints()) {
    double lhs = 0.0;
    for (const LinearTerm& t : c.terms)
      lhs += t.coefficient * out.values.at(name_of(t.variable));
    double violation = 0.0;
    switch (c.sense) {
      case Sense::LessEqual: violation = lhs - c.rhs; break;
      case Sense::GreaterEqual: violation = c.rhs - lhs; break;
      case Sense::Equal: violation = std::fabs(lhs - c.rhs); break;
    }
    out.max_violation = std::max(out.max_violation, violation);
  }

  out.objective = model.objective_constant();
  for (const LinearTerm& t : model.objective_terms())
    out.objective += t.coefficient * out.values.at(name_of(t.variable));
  return out;
}

}  // namespace pwt::testing

#endif
