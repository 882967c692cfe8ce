#include "pwt/preprocess.hpp"

#include <algorithm>

namespace pwt {

namespace {

PackingPlan plan_of(const Instance& instance, const std::vector<std::size_t>& set) {
  PackingPlan p(instance.num_items());
  for (std::size_t g : set) p.set(g, true);
  return p;
}

double cost_of(const Instance& instance, const std::vector<std::size_t>& set) {
  return total_travel_cost(instance, plan_of(instance, set));
}

double weight_of(const Instance& instance, const std::vector<std::size_t>& set) {
  double w = 0.0;
  for (std::size_t g : set) w += instance.item(g).weight;
  return w;
}

}  // namespace

bool PreprocessReport::is_compulsory_item(std::size_t g) const {
  return std::find(compulsory.begin(), compulsory.end(), g) != compulsory.end();
}

bool PreprocessReport::is_discarded_item(std::size_t g) const {
  return std::find(unprofitable.begin(), unprofitable.end(), g) != unprofitable.end();
}

bool is_unprofitable_case1(const Instance& instance, std::size_t item_index) {
  const Item& it = instance.item(item_index);
  // An item heavier than the capacity can never be packed; discard it before
  // evaluating (its solo velocity may not even be positive).
  if (it.weight > instance.capacity()) return true;
  PackingPlan solo(instance.num_items());
  solo.set(item_index, true);
  PackingPlan empty(instance.num_items());
  const double delta =
      total_travel_cost(instance, solo) - total_travel_cost(instance, empty);
  // Exact comparison, no epsilon: ties discard per the non-strict inequality.
  return it.profit <= delta;
}

bool is_compulsory(const Instance& instance, std::size_t item_index,
                   const std::vector<std::size_t>& current_items) {
  if (weight_of(instance, current_items) > instance.capacity())
    throw PreconditionViolated("compulsory test requires an unconstrained item set");
  const Item& it = instance.item(item_index);
  PackingPlan with = plan_of(instance, current_items);
  if (!with.selected(item_index))
    throw PreconditionViolated("item not in current set");
  PackingPlan without = with;
  without.set(item_index, false);
  const double delta =
      total_travel_cost(instance, with) - total_travel_cost(instance, without);
  return it.profit > delta;
}

bool is_unprofitable_case2(const Instance& instance, std::size_t item_index,
                           const std::vector<std::size_t>& compulsory_set) {
  const Item& it = instance.item(item_index);
  PackingPlan base = plan_of(instance, compulsory_set);
  if (base.selected(item_index))
    throw PreconditionViolated("item is already compulsory");
  PackingPlan with = base;
  with.set(item_index, true);
  if (evaluate(instance, with).total_weight > instance.capacity())
    throw PreconditionViolated("case-2 test requires an unconstrained item set");
  const double delta =
      total_travel_cost(instance, with) - total_travel_cost(instance, base);
  return it.profit <= delta;
}

PreprocessReport preprocess(const Instance& instance) {
  const std::size_t m = instance.num_items();
  const int n = instance.num_legs();
  PreprocessReport report;
  report.per_city_compulsory_profit.assign(static_cast<std::size_t>(n), 0.0);
  report.per_city_compulsory_weight.assign(static_cast<std::size_t>(n), 0.0);
  report.per_city_max_weight.assign(static_cast<std::size_t>(n), 0.0);

  // Phase (a): case-1 sweep over all items.
  std::vector<std::size_t> survivors;
  for (std::size_t g = 0; g < m; ++g) {
    if (is_unprofitable_case1(instance, g))
      report.unprofitable.push_back(g);
    else
      survivors.push_back(g);
  }

  // Phase (b): compulsory / case-2 alternation, only once unconstrained.
  std::vector<std::size_t> compulsory;
  if (weight_of(instance, survivors) <= instance.capacity()) {
    report.reduced_to_unconstrained = true;
    bool changed = true;
    while (changed) {
      changed = false;
      ++report.rounds;
      // Compulsory pass against the full current set (survivors incl. already
      // marked compulsory items).
      for (std::size_t g : survivors) {
        if (std::find(compulsory.begin(), compulsory.end(), g) != compulsory.end())
          continue;
        if (is_compulsory(instance, g, survivors)) {
          compulsory.push_back(g);
          changed = true;
        }
      }
      // Case-2 pass against the current compulsory set.
      std::vector<std::size_t> kept;
      for (std::size_t g : survivors) {
        if (std::find(compulsory.begin(), compulsory.end(), g) != compulsory.end()) {
          kept.push_back(g);
          continue;
        }
        if (is_unprofitable_case2(instance, g, compulsory)) {
          report.unprofitable.push_back(g);
          changed = true;
        } else {
          kept.push_back(g);
        }
      }
      survivors = std::move(kept);
    }
  }

  std::sort(compulsory.begin(), compulsory.end());
  std::sort(report.unprofitable.begin(), report.unprofitable.end());
  report.compulsory = compulsory;
  for (std::size_t g : survivors)
    if (std::find(compulsory.begin(), compulsory.end(), g) == compulsory.end())
      report.remaining.push_back(g);
  std::sort(report.remaining.begin(), report.remaining.end());

  for (std::size_t g : report.compulsory) {
    const Item& it = instance.item(g);
    report.per_city_compulsory_profit[static_cast<std::size_t>(it.city - 1)] += it.profit;
    report.per_city_compulsory_weight[static_cast<std::size_t>(it.city - 1)] += it.weight;
    report.per_city_max_weight[static_cast<std::size_t>(it.city - 1)] += it.weight;
  }
  for (std::size_t g : report.remaining) {
    const Item& it = instance.item(g);
    report.per_city_max_weight[static_cast<std::size_t>(it.city - 1)] += it.weight;
  }

  const std::size_t m_prime = report.remaining.size() + report.compulsory.size();
  report.alpha = m == 0 ? 0.0
                        : 100.0 * static_cast<double>(m - m_prime) /
                              static_cast<double>(m);
  return report;
}

}  // namespace pwt
