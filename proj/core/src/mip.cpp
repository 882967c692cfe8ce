#include "pwt/mip.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace pwt {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VarId MipModel::add_variable(Variable v) {
  if (!valid_name(v.name)) throw Error("invalid variable name: " + v.name);
  if (!var_index_.emplace(v.name, variables_.size()).second)
    throw DuplicateName("variable name already used: " + v.name);
  variables_.push_back(std::move(v));
  return variables_.size() - 1;
}

VarId MipModel::add_binary(const std::string& name) {
  return add_variable({name, VarKind::Binary, 0.0, 1.0});
}

VarId MipModel::add_continuous(const std::string& name, double lower, double upper) {
  if (lower > upper) throw Error("lower bound exceeds upper bound for " + name);
  return add_variable({name, VarKind::Continuous, lower, upper});
}

VarId MipModel::add_free(const std::string& name) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return add_variable({name, VarKind::Continuous, -inf, inf});
}

void MipModel::add_constraint(const std::string& name, std::vector<LinearTerm> terms,
                              Sense sense, double rhs) {
  if (!valid_name(name)) throw Error("invalid constraint name: " + name);
  if (!con_index_.emplace(name, constraints_.size()).second)
    throw DuplicateName("constraint name already used: " + name);
  // Merge duplicate variables, preserving first-occurrence order.
  std::vector<LinearTerm> merged;
  for (const LinearTerm& t : terms) {
    if (t.variable >= variables_.size())
      throw Error("constraint references undeclared variable");
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const LinearTerm& m) { return m.variable == t.variable; });
    if (it == merged.end())
      merged.push_back(t);
    else
      it->coefficient += t.coefficient;
  }
  constraints_.push_back({name, std::move(merged), sense, rhs});
}

void MipModel::set_objective(std::vector<LinearTerm> terms, double constant) {
  for (const LinearTerm& t : terms)
    if (t.variable >= variables_.size())
      throw Error("objective references undeclared variable");
  objective_ = std::move(terms);
  objective_constant_ = constant;
}

VarId MipModel::variable_id(const std::string& name) const {
  auto it = var_index_.find(name);
  if (it == var_index_.end()) throw Error("unknown variable: " + name);
  return it->second;
}

bool MipModel::has_variable(const std::string& name) const {
  return var_index_.count(name) != 0;
}

std::string format_coefficient(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void write_terms(std::ostream& out, const MipModel& model,
                 const std::vector<LinearTerm>& terms) {
  bool first = true;
  for (const LinearTerm& t : terms) {
    double c = t.coefficient;
    if (first) {
      if (c < 0.0) {
        out << "- ";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0.0 ? " - " : " + ");
      c = std::fabs(c);
    }
    out << format_coefficient(c) << ' ' << model.variables()[t.variable].name;
  }
  if (first) out << "0";
}

}  // namespace

void write_lp(const MipModel& model, std::ostream& out) {
  out << "\\ generated by pwt\n";
  if (model.objective_constant() != 0.0)
    out << "\\ objective_constant " << format_coefficient(model.objective_constant())
        << "\n";
  out << "Maximize\n obj: ";
  write_terms(out, model, model.objective_terms());
  out << "\nSubject To\n";
  for (const LinearConstraint& c : model.constraints()) {
    out << ' ' << c.name << ": ";
    write_terms(out, model, c.terms);
    switch (c.sense) {
      case Sense::LessEqual: out << " <= "; break;
      case Sense::Equal: out << " = "; break;
      case Sense::GreaterEqual: out << " >= "; break;
    }
    out << format_coefficient(c.rhs) << "\n";
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  bool any_continuous = false;
  for (const Variable& v : model.variables())
    if (v.kind == VarKind::Continuous) any_continuous = true;
  if (any_continuous) out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::Binary) continue;
    if (v.lower == -inf && v.upper == inf) {
      out << ' ' << v.name << " free\n";
    } else if (v.upper == inf) {
      out << ' ' << v.name << " >= " << format_coefficient(v.lower) << "\n";
    } else {
      out << ' ' << format_coefficient(v.lower) << " <= " << v.name
          << " <= " << format_coefficient(v.upper) << "\n";
    }
  }
  bool any_binary = false;
  for (const Variable& v : model.variables()) {
    if (v.kind != VarKind::Binary) continue;
    out << (any_binary ? " " : "Binaries\n ") << v.name;
    any_binary = true;
  }
  if (any_binary) out << "\n";
  out << "End\n";
}

std::string write_lp_string(const MipModel& model) {
  std::ostringstream ss;
  write_lp(model, ss);
  return ss.str();
}

}  // namespace pwt
