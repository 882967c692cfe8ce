#ifndef PWT_ENKP_HPP
#define PWT_ENKP_HPP

#include <vector>

#include "pwt/mip.hpp"
#include "pwt/model.hpp"
#include "pwt/preprocess.hpp"

namespace pwt {

/// Per-leg bounds on the reciprocal-velocity variables y_i, derived from the
/// compulsory load (lower) and the capacity-capped maximal load (upper).
struct EnkpBounds {
  std::vector<double> lower;        // L_i = 1 / (v_max - nu * prefix_wc_i)
  std::vector<double> upper;        // U_i = 1 / (v_max - nu * min(prefix_wmax_i, W))
  std::vector<double> prefix_wc;    // cumulative compulsory weight through city i
  std::vector<double> prefix_wmax;  // cumulative non-discarded weight through city i
};

struct EnkpOptions {
  bool rlt = false;        // 3n capacity-times-y inequalities
  bool dominance = false;  // pairwise item-ordering cuts
};

EnkpBounds compute_bounds(const Instance& instance, const PreprocessReport& report);

/// Lower bound on the cost of hauling item (j, l) from city j to city i,
/// loading only compulsory items on the way. j and i are 1-based cities,
/// j < i; item_index is the item's global index.
double delta_lower(const Instance& instance, const PreprocessReport& report,
                   std::size_t item_index, int to_city);

/// Upper bound counterpart: maximal load, capped by W.
double delta_upper(const Instance& instance, const PreprocessReport& report,
                   std::size_t item_index, int to_city);

/// Pairwise dominance cuts over the non-discarded, non-compulsory items.
std::vector<LinearConstraint> dominance_inequalities(const Instance& instance,
                                                     const PreprocessReport& report,
                                                     MipModel& model);

/// Exact linearized mixed 0-1 program. Variables: x_{j}_{k} binary for each
/// remaining item, y_{i} in [L_i, U_i], z_{i}_{j}_{k} >= 0 for j <= i.
/// Compulsory items are folded into constants; the compulsory profit is the
/// model's objective constant.
MipModel build_enkp(const Instance& instance, const PreprocessReport& report,
                    const EnkpOptions& options = {});

/// True if the plan satisfies every dominance inequality (7)-(9); an ANKP
/// solution may only warm-start ENKP when this holds.
bool satisfies_dominance(const Instance& instance, const PreprocessReport& report,
                         const PackingPlan& plan);

}  // namespace pwt

#endif
