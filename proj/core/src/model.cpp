#include "pwt/model.hpp"

#include <algorithm>
#include <utility>

namespace pwt {

Instance::Instance(std::vector<double> distances,
                   std::vector<std::vector<Item>> items_per_city, double capacity,
                   double v_min, double v_max, double rent)
    : distances_(std::move(distances)),
      capacity_(capacity),
      v_min_(v_min),
      v_max_(v_max),
      rent_(rent),
      total_weight_(0.0) {
  if (distances_.empty()) throw Error("instance needs at least one leg");
  for (double d : distances_)
    if (!(d > 0.0)) throw Error("leg distances must be positive");
  if (!(capacity_ > 0.0)) throw Error("capacity must be positive");
  if (!(v_min_ > 0.0) || !(v_min_ < v_max_))
    throw Error("velocity bounds must satisfy 0 < v_min < v_max");
  if (!(rent_ > 0.0)) throw Error("rent rate must be positive");

  const int n = num_legs();
  if (static_cast<int>(items_per_city.size()) > n)
    throw Error("items assigned past city n");
  items_per_city.resize(static_cast<std::size_t>(n));

  city_offsets_.reserve(static_cast<std::size_t>(n) + 1);
  for (int city = 1; city <= n; ++city) {
    city_offsets_.push_back(items_.size());
    int slot = 1;
    for (Item it : items_per_city[static_cast<std::size_t>(city - 1)]) {
      if (!(it.profit > 0.0)) throw Error("item profit must be positive");
      if (!(it.weight > 0.0)) throw Error("item weight must be positive");
      it.city = city;
      it.slot = slot++;
      total_weight_ += it.weight;
      items_.push_back(it);
    }
  }
  city_offsets_.push_back(items_.size());
}

std::span<const Item> Instance::items_in_city(int city) const {
  if (city < 1 || city > num_legs()) throw Error("city index out of range");
  const std::size_t lo = city_offsets_[static_cast<std::size_t>(city - 1)];
  const std::size_t hi = city_offsets_[static_cast<std::size_t>(city)];
  return {items_.data() + lo, hi - lo};
}

std::string PackingPlan::to_bit_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

PackingPlan PackingPlan::from_bit_string(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      continue;
    else
      throw ParseError(std::string("invalid plan character '") + c + "'");
  }
  return PackingPlan(std::move(bits));
}

double leg_velocity(const Instance& instance, const PackingPlan& plan, int leg) {
  if (leg < 1 || leg > instance.num_legs()) throw Error("leg index out of range");
  if (plan.size() != instance.num_items()) throw Error("plan length mismatch");
  const double nu = instance.nu();
  double load = 0.0;
  for (std::size_t j = 0; j < instance.num_items(); ++j) {
    const Item& it = instance.item(j);
    if (it.city > leg) break;
    if (plan.selected(j)) load += it.weight;
  }
  return instance.v_max() - nu * load;
}

EvalResult evaluate(const Instance& instance, const PackingPlan& plan) {
  if (plan.size() != instance.num_items()) throw Error("plan length mismatch");
  const int n = instance.num_legs();
  const double nu = instance.nu();

  EvalResult r;
  r.per_leg_velocity.resize(static_cast<std::size_t>(n));

  double load = 0.0;
  std::size_t j = 0;
  for (int i = 1; i <= n; ++i) {
    for (const Item& it : instance.items_in_city(i)) {
      if (plan.selected(j)) {
        load += it.weight;
        r.total_profit += it.profit;
      }
      ++j;
    }
    const double v = instance.v_max() - nu * load;
    if (!(v > 0.0))
      throw DegenerateVelocity("velocity <= 0 on leg " + std::to_string(i));
    r.per_leg_velocity[static_cast<std::size_t>(i - 1)] = v;
    r.travel_cost += instance.rent() * instance.distance(i) / v;
  }
  r.total_weight = load;
  r.feasible = load <= instance.capacity();
  r.objective = r.total_profit - r.travel_cost;
  return r;
}

double total_travel_cost(const Instance& instance, const PackingPlan& subset) {
  return evaluate(instance, subset).travel_cost;
}

}  // namespace pwt
