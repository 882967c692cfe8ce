#ifndef PWT_PREPROCESS_HPP
#define PWT_PREPROCESS_HPP

#include <cstddef>
#include <vector>

#include "pwt/model.hpp"

namespace pwt {

/// Result of the compulsory/unprofitable fixpoint reduction. Item sets hold
/// global item indices; the three sets partition the instance's items.
struct PreprocessReport {
  std::vector<std::size_t> compulsory;
  std::vector<std::size_t> unprofitable;
  std::vector<std::size_t> remaining;
  double alpha = 0.0;  // 100 (m - m') / m, m' = |remaining| + |compulsory|
  bool reduced_to_unconstrained = false;
  int rounds = 0;
  // Per-city aggregates (index city-1): profit/weight of compulsory items and
  // total weight of all non-discarded items including compulsory.
  std::vector<double> per_city_compulsory_profit;
  std::vector<double> per_city_compulsory_weight;
  std::vector<double> per_city_max_weight;

  bool is_compulsory_item(std::size_t g) const;
  bool is_discarded_item(std::size_t g) const;
};

/// Case-1 unprofitable test: profit covers not even the cost of carrying the
/// item alone. Valid in both the constrained and unconstrained regime.
bool is_unprofitable_case1(const Instance& instance, std::size_t item_index);

/// Compulsory test against the current item set (unconstrained regime only:
/// total weight of current_items must be <= W, else PreconditionViolated).
bool is_compulsory(const Instance& instance, std::size_t item_index,
                   const std::vector<std::size_t>& current_items);

/// Case-2 unprofitable test against the current compulsory set (unconstrained
/// regime; item must not be compulsory).
bool is_unprofitable_case2(const Instance& instance, std::size_t item_index,
                           const std::vector<std::size_t>& compulsory_set);

/// Full reduction: one case-1 sweep, then (if the survivors fit in W) an
/// alternating compulsory / case-2 fixpoint. Scan order is route order,
/// slot order within a city.
PreprocessReport preprocess(const Instance& instance);

}  // namespace pwt

#endif
