#ifndef PWT_ANKP_HPP
#define PWT_ANKP_HPP

#include <vector>

#include "pwt/mip.hpp"
#include "pwt/model.hpp"
#include "pwt/preprocess.hpp"

namespace pwt {

/// One breakpoint of the piecewise-linear model of t(v) = 1/v.
struct Breakpoint {
  double velocity = 0.0;
  double time = 0.0;  // 1 / velocity
};

/// Segment chords over [v_min, v_max], breakpoints equally spaced in time.
/// Segment a spans breakpoints a and a+1 (decreasing velocity).
struct SegmentSet {
  int tau = 0;
  std::vector<Breakpoint> breakpoints;        // tau + 1, velocity decreasing
  std::vector<double> city_v_min;             // per leg, index city-1
  std::vector<double> city_v_max;
  std::vector<std::vector<int>> active_segments;    // A_i, segment indices
  std::vector<std::vector<int>> active_breakpoints; // B_i, contiguous indices
};

/// tau + 1 breakpoints with times equally spaced on [1/v_max, 1/v_min].
std::vector<Breakpoint> build_segments(double v_min, double v_max, int tau);

/// Reachable velocity interval per leg: compulsory load only (upper end) down
/// to the capacity-capped full load (lower end).
void city_velocity_ranges(const Instance& instance, const PreprocessReport& report,
                          std::vector<double>& v_min_out,
                          std::vector<double>& v_max_out);

/// A_i = segments whose velocity span intersects [v_i_min, v_i_max];
/// B_i = the union of their endpoints (contiguous).
SegmentSet build_segment_set(const Instance& instance, const PreprocessReport& report,
                             int tau);

/// Percentage of breakpoint variables actually instantiated:
/// 100 * sum |B_i| / (tau * n).
double beta(const SegmentSet& segments);

/// Piecewise-linear mixed 0-1 program over the preprocessed instance.
/// Variables: x_{i}_{k} binary, yb_{i}_{b} in [0,1], p_{i} free, w_{i} >= 0;
/// objective maximizes p_n.
MipModel build_ankp(const Instance& instance, const PreprocessReport& report, int tau);

/// Exact objective of a plan taken from an ANKP solution.
EvalResult recompute_exact(const Instance& instance, const PackingPlan& plan);

/// Chord value at velocity v over the breakpoints of B_i (lower convex
/// envelope in (v, t) space); this is what the LP assigns for a fixed plan.
double chord_time(const SegmentSet& segments, int city, double velocity);

/// ANKP objective for a fixed plan: exact profits, chord-approximated times.
double model_objective_for_plan(const Instance& instance,
                                const PreprocessReport& report,
                                const SegmentSet& segments, const PackingPlan& plan);

/// Max over segments of chord(v) - 1/v; the per-segment maximizer is
/// v = sqrt(v_lo * v_hi).
double approximation_error_bound(const std::vector<Breakpoint>& breakpoints);

}  // namespace pwt

#endif
