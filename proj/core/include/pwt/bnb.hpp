#ifndef PWT_BNB_HPP
#define PWT_BNB_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "pwt/model.hpp"
#include "pwt/preprocess.hpp"

namespace pwt {

struct SearchNode {
  std::size_t depth = 0;  // next undecided item position (within remaining order)
  std::vector<std::uint8_t> decisions;  // take/skip for positions < depth
  double committed_weight = 0.0;
  double committed_profit = 0.0;
  double bound = std::numeric_limits<double>::infinity();
};

struct SolveLimits {
  double time_seconds = std::numeric_limits<double>::infinity();
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  // Tighten the profit part of the node bound with a fractional knapsack
  // over the residual capacity. Off by default so node counts stay easy to
  // audit against the plain bound.
  bool fractional_bound = false;
};

struct SolveResult {
  PackingPlan best_plan;
  double best_objective = -std::numeric_limits<double>::infinity();
  bool proven_optimal = false;
  std::uint64_t nodes_expanded = 0;
  double wall_seconds = 0.0;
  double upper_bound = std::numeric_limits<double>::infinity();
  double relative_gap = 0.0;  // 100 (UB - LB) / |UB|; 0 when proven optimal
};

/// Exhaustive enumeration of all 2^m plans (m <= 24). Ties go to the
/// lexicographically smallest plan in global item order.
SolveResult solve_oracle(const Instance& instance);

/// Depth-first branch-and-bound over the remaining items in route order,
/// take-branch first. Compulsory items are pre-committed, unprofitable items
/// excluded. On exhaustion the result is proven optimal; under limits it is
/// the best incumbent with a valid upper bound and gap.
SolveResult solve_bb(const Instance& instance, const PreprocessReport& report,
                     const SolveLimits& limits = {});

}  // namespace pwt

#endif
