#include "pwt/reduction.hpp"

#include <numeric>

namespace pwt {

SspReduction ssp_to_nkpu(const SspInstance& ssp) {
  if (ssp.values.empty()) throw Error("subset sum needs at least one value");
  std::int64_t total = 0;
  for (std::int64_t s : ssp.values) {
    if (s <= 0) throw Error("subset sum values must be positive");
    total += s;
  }
  if (ssp.target <= 0) throw Error("subset sum target must be positive");
  if (ssp.target > total) throw Error("target exceeds the sum of all values");

  const double w = static_cast<double>(total);
  const double q = static_cast<double>(ssp.target);
  const double rstar = w * (2.0 - q / w) * (2.0 - q / w);

  std::vector<Item> city1;
  city1.reserve(ssp.values.size());
  for (std::int64_t s : ssp.values)
    city1.push_back({static_cast<double>(s), static_cast<double>(s), 0, 0});

  Instance instance({1.0}, {std::move(city1)}, w, 1.0, 2.0, rstar);
  const double b = 2.0 * (q - w);
  return {std::move(instance), b};
}

double f_rstar(double w, double capacity, double rstar) {
  if (w < 0.0 || w > capacity) throw Error("weight outside [0, W]");
  return w - rstar / (2.0 - w / capacity);
}

}  // namespace pwt
