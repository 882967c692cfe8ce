#ifndef PWT_REDUCTION_HPP
#define PWT_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "pwt/model.hpp"

namespace pwt {

/// Subset sum input: does some subset of `values` sum to `target`?
struct SspInstance {
  std::vector<std::int64_t> values;
  std::int64_t target = 0;
};

struct SspReduction {
  Instance instance;
  double threshold_b;  // SSP answer is YES iff the optimum is >= threshold_b
};

/// Encode a subset sum instance as a two-city unconstrained knapsack
/// instance: one leg of length 1, items with profit = weight = s_k,
/// W = sum(s), v in [1,2], rent W(2 - Q/W)^2. The threshold is the closed
/// form 2(Q - W), exact at the YES/NO boundary.
SspReduction ssp_to_nkpu(const SspInstance& ssp);

/// w - rstar / (2 - w/W) on [0, W]; its unique maximizer is
/// W(2 - sqrt(rstar/W)).
double f_rstar(double w, double capacity, double rstar);

}  // namespace pwt

#endif
