#ifndef PWT_TESTS_SUPPORT_HPP
#define PWT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "pwt/model.hpp"

namespace pwt::testing {

// n=2, d=(1,1), v in [0.1, 1], W=10, R=1; city 1: (p=10,w=3), (p=1,w=4);
// city 2: (p=4,w=2). Small enough to check everything by hand.
inline Instance tiny1() {
  return Instance({1.0, 1.0},
                  {{{10.0, 3.0, 0, 0}, {1.0, 4.0, 0, 0}}, {{4.0, 2.0, 0, 0}}},
                  10.0, 0.1, 1.0, 1.0);
}

enum class ItemStyle { Uncorrelated, BoundedStronglyCorrelated };

// Random small instance: n <= 5 legs, up to max_items items, capacity drawn
// between 30% and 120% of the total item weight.
inline Instance random_instance(std::mt19937& rng, int max_items = 10,
                                ItemStyle style = ItemStyle::Uncorrelated) {
  std::uniform_int_distribution<int> n_dist(1, 5);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> m_dist(1, max_items);
  const int m = m_dist(rng);

  std::uniform_real_distribution<double> d_dist(1.0, 20.0);
  std::vector<double> distances;
  for (int i = 0; i < n; ++i) distances.push_back(d_dist(rng));

  std::uniform_int_distribution<int> city_dist(1, n);
  std::uniform_int_distribution<int> w_dist(1, 30);
  std::uniform_int_distribution<int> p_dist(1, 30);
  std::uniform_int_distribution<int> noise_dist(-5, 5);
  std::vector<std::vector<Item>> per_city(static_cast<std::size_t>(n));
  double total_weight = 0.0;
  for (int k = 0; k < m; ++k) {
    const int city = city_dist(rng);
    const double w = w_dist(rng);
    double p;
    if (style == ItemStyle::Uncorrelated) {
      p = p_dist(rng);
    } else {
      p = std::max(1.0, w + noise_dist(rng));
    }
    per_city[static_cast<std::size_t>(city - 1)].push_back({p, w, 0, 0});
    total_weight += w;
  }

  std::uniform_real_distribution<double> cap_dist(0.3, 1.2);
  const double capacity = std::max(1.0, cap_dist(rng) * total_weight);
  std::uniform_real_distribution<double> r_dist(0.5, 5.0);
  return Instance(std::move(distances), std::move(per_city), capacity, 0.1, 1.0,
                  r_dist(rng));
}

}  // namespace pwt::testing

#endif
