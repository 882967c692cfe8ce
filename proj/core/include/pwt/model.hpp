#ifndef PWT_MODEL_HPP
#define PWT_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pwt/errors.hpp"

namespace pwt {

/// One item available at a city along the route. city/slot are 1-based.
struct Item {
  double profit = 0.0;
  double weight = 0.0;
  int city = 0;
  int slot = 0;
};

/// A fixed-route instance: n legs between cities 1..n+1, items at cities
/// 1..n, capacity W, velocity range [v_min, v_max], rent rate R.
///
/// Items are stored in a frozen city-major, slot-minor global order; every
/// plan bit vector and every MIP variable order follows it. Immutable after
/// construction.
class Instance {
 public:
  Instance(std::vector<double> distances, std::vector<std::vector<Item>> items_per_city,
           double capacity, double v_min, double v_max, double rent);

  int num_legs() const { return static_cast<int>(distances_.size()); }
  std::size_t num_items() const { return items_.size(); }
  double distance(int leg) const { return distances_.at(leg - 1); }
  const std::vector<double>& distances() const { return distances_; }
  double capacity() const { return capacity_; }
  double v_min() const { return v_min_; }
  double v_max() const { return v_max_; }
  double rent() const { return rent_; }

  /// Velocity lost per unit of carried weight: (v_max - v_min) / W.
  double nu() const { return (v_max_ - v_min_) / capacity_; }

  const std::vector<Item>& items() const { return items_; }
  const Item& item(std::size_t global_index) const { return items_.at(global_index); }
  std::span<const Item> items_in_city(int city) const;
  /// Global index of the first item of `city`.
  std::size_t city_offset(int city) const { return city_offsets_.at(city - 1); }
  double total_item_weight() const { return total_weight_; }

 private:
  std::vector<double> distances_;
  std::vector<Item> items_;             // city-major, slot-minor
  std::vector<std::size_t> city_offsets_;  // size n+1, offsets into items_
  double capacity_;
  double v_min_;
  double v_max_;
  double rent_;
  double total_weight_;
};

/// Binary selection over the instance's global item order.
class PackingPlan {
 public:
  PackingPlan() = default;
  explicit PackingPlan(std::size_t num_items) : bits_(num_items, 0) {}
  explicit PackingPlan(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool selected(std::size_t i) const { return bits_.at(i) != 0; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// "0101..." in global item order.
  std::string to_bit_string() const;
  static PackingPlan from_bit_string(const std::string& s);

  friend bool operator==(const PackingPlan&, const PackingPlan&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct EvalResult {
  double objective = 0.0;
  double travel_cost = 0.0;
  double total_profit = 0.0;
  double total_weight = 0.0;
  std::vector<double> per_leg_velocity;
  bool feasible = false;
};

/// Velocity on leg i (1-based) under the given plan: v_max - nu * load_i,
/// where load_i is the selected weight in cities 1..i. Returned even when it
/// falls below v_min (infeasible plans); caller checks feasibility.
double leg_velocity(const Instance& instance, const PackingPlan& plan, int leg);

/// Exact evaluation of the nonlinear objective. Defined for infeasible plans
/// too as long as every leg velocity stays positive; throws
/// DegenerateVelocity otherwise.
EvalResult evaluate(const Instance& instance, const PackingPlan& plan);

/// Rent times the sum over legs of distance / velocity for the given subset.
double total_travel_cost(const Instance& instance, const PackingPlan& subset);

}  // namespace pwt

#endif
