#include "pwt/enkp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pwt {

namespace {

std::string x_name(const Item& it) {
  return "x_" + std::to_string(it.city) + "_" + std::to_string(it.slot);
}

std::string y_name(int i) { return "y_" + std::to_string(i); }

std::string z_name(int i, const Item& it) {
  return "z_" + std::to_string(i) + "_" + std::to_string(it.city) + "_" +
         std::to_string(it.slot);
}

// Which side a dominance cut forces: select_le means x_a <= x_b.
struct DomPair {
  std::size_t a = 0;
  std::size_t b = 0;
  int rule = 7;  // 7, 8 or 9
};

// Rules (7)-(9) over the non-discarded, non-compulsory items. For every
// pair the cut reads x_a <= x_b (rules 7 and 8) or x_a >= x_b (rule 9).
std::vector<DomPair> dominance_pairs(const Instance& instance,
                                     const PreprocessReport& report) {
  std::vector<DomPair> pairs;
  const auto& rem = report.remaining;
  for (std::size_t u = 0; u < rem.size(); ++u) {
    for (std::size_t v = 0; v < rem.size(); ++v) {
      if (u == v) continue;
      const std::size_t gl = rem[u];
      const std::size_t gk = rem[v];
      const Item& el = instance.item(gl);
      const Item& ek = instance.item(gk);
      if (el.city == ek.city) {
        if (el.profit < ek.profit && el.weight > ek.weight)
          pairs.push_back({gl, gk, 7});
      } else if (el.city < ek.city) {
        if (el.weight > ek.weight &&
            el.profit - delta_lower(instance, report, gl, ek.city) < ek.profit)
          pairs.push_back({gl, gk, 8});
        if (el.weight < ek.weight &&
            el.profit - delta_upper(instance, report, gl, ek.city) > ek.profit)
          pairs.push_back({gl, gk, 9});
      }
    }
  }
  return pairs;
}

}  // namespace

EnkpBounds compute_bounds(const Instance& instance, const PreprocessReport& report) {
  const int n = instance.num_legs();
  const double nu = instance.nu();
  EnkpBounds b;
  b.prefix_wc.resize(static_cast<std::size_t>(n));
  b.prefix_wmax.resize(static_cast<std::size_t>(n));
  b.lower.resize(static_cast<std::size_t>(n));
  b.upper.resize(static_cast<std::size_t>(n));
  double wc = 0.0, wmax = 0.0;
  for (int i = 0; i < n; ++i) {
    wc += report.per_city_compulsory_weight[static_cast<std::size_t>(i)];
    wmax += report.per_city_max_weight[static_cast<std::size_t>(i)];
    b.prefix_wc[static_cast<std::size_t>(i)] = wc;
    b.prefix_wmax[static_cast<std::size_t>(i)] = wmax;
    b.lower[static_cast<std::size_t>(i)] = 1.0 / (instance.v_max() - nu * wc);
    b.upper[static_cast<std::size_t>(i)] =
        1.0 / (instance.v_max() - nu * std::min(wmax, instance.capacity()));
  }
  return b;
}

double delta_lower(const Instance& instance, const PreprocessReport& report,
                   std::size_t item_index, int to_city) {
  const Item& it = instance.item(item_index);
  if (it.city >= to_city || to_city > instance.num_legs() + 1)
    throw Error("delta bounds need from-city < to-city");
  const double nu = instance.nu();
  double prefix_wc = 0.0;
  for (int b = 1; b < it.city; ++b)
    prefix_wc += report.per_city_compulsory_weight[static_cast<std::size_t>(b - 1)];
  double sum = 0.0;
  for (int a = it.city; a < to_city; ++a) {
    prefix_wc += report.per_city_compulsory_weight[static_cast<std::size_t>(a - 1)];
    sum += instance.distance(a) *
           (1.0 / (instance.v_max() - nu * (it.weight + prefix_wc)) -
            1.0 / (instance.v_max() - nu * prefix_wc));
  }
  return instance.rent() * sum;
}

double delta_upper(const Instance& instance, const PreprocessReport& report,
                   std::size_t item_index, int to_city) {
  const Item& it = instance.item(item_index);
  if (it.city >= to_city || to_city > instance.num_legs() + 1)
    throw Error("delta bounds need from-city < to-city");
  const double nu = instance.nu();
  const double cap = instance.capacity();
  double prefix_wmax = 0.0;
  for (int b = 1; b < it.city; ++b)
    prefix_wmax += report.per_city_max_weight[static_cast<std::size_t>(b - 1)];
  double sum = 0.0;
  for (int a = it.city; a < to_city; ++a) {
    prefix_wmax += report.per_city_max_weight[static_cast<std::size_t>(a - 1)];
    sum += instance.distance(a) *
           (1.0 / (instance.v_max() - nu * std::min(it.weight + prefix_wmax, cap)) -
            1.0 / (instance.v_max() - nu * std::min(prefix_wmax, cap)));
  }
  return instance.rent() * sum;
}

std::vector<LinearConstraint> dominance_inequalities(const Instance& instance,
                                                     const PreprocessReport& report,
                                                     MipModel& model) {
  std::vector<LinearConstraint> cuts;
  int serial = 0;
  for (const DomPair& p : dominance_pairs(instance, report)) {
    const Item& a = instance.item(p.a);
    const Item& b = instance.item(p.b);
    const VarId xa = model.variable_id(x_name(a));
    const VarId xb = model.variable_id(x_name(b));
    const std::string name = "dom" + std::to_string(p.rule) + "_" +
                             std::to_string(serial++) + "_" + std::to_string(a.city) +
                             "_" + std::to_string(a.slot) + "_" +
                             std::to_string(b.city) + "_" + std::to_string(b.slot);
    // rules 7/8: x_a - x_b <= 0; rule 9: x_a - x_b >= 0
    const Sense sense = p.rule == 9 ? Sense::GreaterEqual : Sense::LessEqual;
    cuts.push_back({name, {{1.0, xa}, {-1.0, xb}}, sense, 0.0});
  }
  return cuts;
}

bool satisfies_dominance(const Instance& instance, const PreprocessReport& report,
                         const PackingPlan& plan) {
  for (const DomPair& p : dominance_pairs(instance, report)) {
    const int lhs = plan.selected(p.a) ? 1 : 0;
    const int rhs = plan.selected(p.b) ? 1 : 0;
    if (p.rule == 9 ? lhs < rhs : lhs > rhs) return false;
  }
  return true;
}

MipModel build_enkp(const Instance& instance, const PreprocessReport& report,
                    const EnkpOptions& options) {
  const int n = instance.num_legs();
  const double nu = instance.nu();
  const EnkpBounds bounds = compute_bounds(instance, report);

  MipModel model;

  std::vector<VarId> x_ids;  // parallel to report.remaining
  for (std::size_t g : report.remaining)
    x_ids.push_back(model.add_binary(x_name(instance.item(g))));

  std::vector<VarId> y_ids;
  for (int i = 1; i <= n; ++i)
    y_ids.push_back(model.add_continuous(y_name(i),
                                         bounds.lower[static_cast<std::size_t>(i - 1)],
                                         bounds.upper[static_cast<std::size_t>(i - 1)]));

  // z_{i}_{j}_{k} = x_{j}_{k} * y_i, for items at city j <= i. With RLT on,
  // the capacity-product rows also need the j > i products.
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto ensure_z = [&](int i, std::size_t r) -> VarId {
    const Item& it = instance.item(report.remaining[r]);
    const std::string name = z_name(i, it);
    if (model.has_variable(name)) return model.variable_id(name);
    const VarId z = model.add_continuous(name, 0.0, inf);
    const VarId x = x_ids[r];
    const VarId y = y_ids[static_cast<std::size_t>(i - 1)];
    const double li = bounds.lower[static_cast<std::size_t>(i - 1)];
    const double ui = bounds.upper[static_cast<std::size_t>(i - 1)];
    const std::string tag = std::to_string(i) + "_" + std::to_string(it.city) + "_" +
                            std::to_string(it.slot);
    model.add_constraint("lin1_" + tag, {{1.0, z}, {-ui, x}}, Sense::LessEqual, 0.0);
    model.add_constraint("lin2_" + tag, {{1.0, z}, {-li, x}}, Sense::GreaterEqual, 0.0);
    model.add_constraint("lin3_" + tag, {{1.0, z}, {-1.0, y}, {-ui, x}},
                         Sense::GreaterEqual, -ui);
    model.add_constraint("lin4_" + tag, {{1.0, z}, {-1.0, y}, {-li, x}},
                         Sense::LessEqual, -li);
    return z;
  };

  // Velocity equalities: (v_max - nu * prefix_wc_i) y_i - nu * sum w z = 1.
  for (int i = 1; i <= n; ++i) {
    std::vector<LinearTerm> terms;
    terms.push_back({instance.v_max() -
                         nu * bounds.prefix_wc[static_cast<std::size_t>(i - 1)],
                     y_ids[static_cast<std::size_t>(i - 1)]});
    for (std::size_t r = 0; r < report.remaining.size(); ++r) {
      const Item& it = instance.item(report.remaining[r]);
      if (it.city > i) continue;
      terms.push_back({-nu * it.weight, ensure_z(i, r)});
    }
    model.add_constraint("vel_" + std::to_string(i), std::move(terms), Sense::Equal,
                         1.0);
  }

  // Capacity over the remaining items, compulsory weight moved to the rhs.
  double wc_total = 0.0;
  for (double w : report.per_city_compulsory_weight) wc_total += w;
  const double residual_capacity = instance.capacity() - wc_total;
  {
    std::vector<LinearTerm> terms;
    for (std::size_t r = 0; r < report.remaining.size(); ++r)
      terms.push_back({instance.item(report.remaining[r]).weight, x_ids[r]});
    model.add_constraint("cap", std::move(terms), Sense::LessEqual, residual_capacity);
  }

  if (options.rlt) {
    for (int l = 1; l <= n; ++l) {
      const VarId y = y_ids[static_cast<std::size_t>(l - 1)];
      const double ll = bounds.lower[static_cast<std::size_t>(l - 1)];
      const double ul = bounds.upper[static_cast<std::size_t>(l - 1)];
      std::vector<LinearTerm> t1, t2, t3;
      for (std::size_t r = 0; r < report.remaining.size(); ++r) {
        const Item& it = instance.item(report.remaining[r]);
        const VarId z = ensure_z(l, r);
        t1.push_back({it.weight, z});
        t2.push_back({ul * it.weight, x_ids[r]});
        t2.push_back({-it.weight, z});
        t3.push_back({it.weight, z});
        t3.push_back({-ll * it.weight, x_ids[r]});
      }
      t1.push_back({-residual_capacity, y});
      t2.push_back({residual_capacity, y});
      t3.push_back({-residual_capacity, y});
      model.add_constraint("rlt1_" + std::to_string(l), std::move(t1),
                           Sense::LessEqual, 0.0);
      model.add_constraint("rlt2_" + std::to_string(l), std::move(t2),
                           Sense::LessEqual, ul * residual_capacity);
      model.add_constraint("rlt3_" + std::to_string(l), std::move(t3),
                           Sense::LessEqual, -ll * residual_capacity);
    }
  }

  if (options.dominance) {
    for (LinearConstraint& c : dominance_inequalities(instance, report, model))
      model.add_constraint(c.name, c.terms, c.sense, c.rhs);
  }

  // Objective: remaining profits minus rent-weighted travel time, plus the
  // compulsory profit as a constant.
  double pc_total = 0.0;
  for (double p : report.per_city_compulsory_profit) pc_total += p;
  std::vector<LinearTerm> obj;
  for (std::size_t r = 0; r < report.remaining.size(); ++r)
    obj.push_back({instance.item(report.remaining[r]).profit, x_ids[r]});
  for (int i = 1; i <= n; ++i)
    obj.push_back({-instance.rent() * instance.distance(i),
                   y_ids[static_cast<std::size_t>(i - 1)]});
  model.set_objective(std::move(obj), pc_total);
  return model;
}

}  // namespace pwt
