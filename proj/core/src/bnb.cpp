#include "pwt/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace pwt {

namespace {

bool lex_less(const PackingPlan& a, const PackingPlan& b) {
  return a.bits() < b.bits();
}

double gap_percent(double ub, double lb) {
  if (ub <= lb) return 0.0;
  if (ub == 0.0) return std::numeric_limits<double>::infinity();
  return 100.0 * (ub - lb) / std::fabs(ub);
}

}  // namespace

SolveResult solve_oracle(const Instance& instance) {
  const std::size_t m = instance.num_items();
  if (m > 24) throw TooLarge("oracle enumeration limited to 24 items");
  const auto start = std::chrono::steady_clock::now();

  SolveResult result;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PackingPlan plan(m);
    double weight = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        plan.set(j, true);
        weight += instance.item(j).weight;
      }
    }
    if (weight > instance.capacity()) continue;
    const double objective = evaluate(instance, plan).objective;
    if (objective > result.best_objective ||
        (objective == result.best_objective && lex_less(plan, result.best_plan))) {
      result.best_objective = objective;
      result.best_plan = plan;
    }
  }
  result.proven_optimal = true;
  result.upper_bound = result.best_objective;
  result.relative_gap = 0.0;
  result.nodes_expanded = count;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SolveResult solve_bb(const Instance& instance, const PreprocessReport& report,
                     const SolveLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t>& rem = report.remaining;
  const std::size_t r = rem.size();

  PackingPlan base(instance.num_items());
  double base_weight = 0.0;
  double base_profit = 0.0;
  for (std::size_t g : report.compulsory) {
    base.set(g, true);
    base_weight += instance.item(g).weight;
    base_profit += instance.item(g).profit;
  }

  // Suffix profit sums over the remaining items in route order.
  std::vector<double> suffix_profit(r + 1, 0.0);
  for (std::size_t i = r; i-- > 0;)
    suffix_profit[i] = suffix_profit[i + 1] + instance.item(rem[i]).profit;

  // Density order for the optional fractional-knapsack bound.
  std::vector<std::size_t> density_order(r);
  for (std::size_t i = 0; i < r; ++i) density_order[i] = i;
  std::stable_sort(density_order.begin(), density_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const Item& ia = instance.item(rem[a]);
                     const Item& ib = instance.item(rem[b]);
                     return ia.profit * ib.weight > ib.profit * ia.weight;
                   });

  auto plan_for = [&](const std::vector<std::uint8_t>& decisions) {
    PackingPlan p = base;
    for (std::size_t i = 0; i < decisions.size(); ++i)
      if (decisions[i]) p.set(rem[i], true);
    return p;
  };

  auto node_bound = [&](const SearchNode& node) {
    const double committed_cost =
        evaluate(instance, plan_for(node.decisions)).travel_cost;
    double profit_part = suffix_profit[node.depth];
    if (limits.fractional_bound) {
      double residual = instance.capacity() - base_weight - node.committed_weight;
      double frac = 0.0;
      for (std::size_t pos : density_order) {
        if (pos < node.depth || residual <= 0.0) continue;
        const Item& it = instance.item(rem[pos]);
        if (it.weight <= residual) {
          frac += it.profit;
          residual -= it.weight;
        } else {
          frac += it.profit * residual / it.weight;
          residual = 0.0;
        }
      }
      profit_part = std::min(profit_part, frac);
    }
    return base_profit + node.committed_profit + profit_part - committed_cost;
  };

  SolveResult result;

  // Initial incumbent: the all-compulsory plan.
  result.best_plan = base;
  result.best_objective = evaluate(instance, base).objective;

  SearchNode root;
  root.bound = node_bound(root);

  std::vector<SearchNode> stack{root};
  bool stopped = false;
  while (!stack.empty()) {
    if (result.nodes_expanded >= limits.node_budget) {
      stopped = true;
      break;
    }
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count() >= limits.time_seconds) {
      stopped = true;
      break;
    }
    SearchNode node = std::move(stack.back());
    stack.pop_back();
    ++result.nodes_expanded;
    if (node.bound <= result.best_objective) continue;

    if (node.depth == r) {
      const double objective =
          evaluate(instance, plan_for(node.decisions)).objective;
      if (objective > result.best_objective) {
        result.best_objective = objective;
        result.best_plan = plan_for(node.decisions);
      }
      continue;
    }

    const Item& next = instance.item(rem[node.depth]);

    SearchNode skip;
    skip.depth = node.depth + 1;
    skip.decisions = node.decisions;
    skip.decisions.push_back(0);
    skip.committed_weight = node.committed_weight;
    skip.committed_profit = node.committed_profit;
    skip.bound = node_bound(skip);

    // Push skip first so the take branch is explored first.
    if (skip.bound > result.best_objective) stack.push_back(std::move(skip));

    if (base_weight + node.committed_weight + next.weight <= instance.capacity()) {
      SearchNode take;
      take.depth = node.depth + 1;
      take.decisions = node.decisions;
      take.decisions.push_back(1);
      take.committed_weight = node.committed_weight + next.weight;
      take.committed_profit = node.committed_profit + next.profit;
      take.bound = node_bound(take);
      if (take.bound > result.best_objective) stack.push_back(std::move(take));
    }
  }

  result.proven_optimal = !stopped;
  if (result.proven_optimal) {
    result.upper_bound = result.best_objective;
    result.relative_gap = 0.0;
  } else {
    double ub = result.best_objective;
    for (const SearchNode& node : stack) ub = std::max(ub, node.bound);
    result.upper_bound = ub;
    result.relative_gap = gap_percent(ub, result.best_objective);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace pwt
