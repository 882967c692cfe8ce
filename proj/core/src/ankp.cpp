#include "pwt/ankp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pwt {

std::vector<Breakpoint> build_segments(double v_min, double v_max, int tau) {
  if (tau < 1) throw Error("segment count must be at least 1");
  if (!(v_min > 0.0) || !(v_min < v_max)) throw Error("invalid velocity range");
  const double t_min = 1.0 / v_max;
  const double t_max = 1.0 / v_min;
  const double spacing = (t_max - t_min) / tau;
  std::vector<Breakpoint> bps(static_cast<std::size_t>(tau) + 1);
  for (int b = 0; b <= tau; ++b) {
    const double t = t_min + spacing * b;
    bps[static_cast<std::size_t>(b)] = {1.0 / t, t};
  }
  // Pin the endpoints so t(v_max) and t(v_min) are breakpoint-exact.
  bps.front() = {v_max, t_min};
  bps.back() = {v_min, t_max};
  return bps;
}

void city_velocity_ranges(const Instance& instance, const PreprocessReport& report,
                          std::vector<double>& v_min_out,
                          std::vector<double>& v_max_out) {
  const int n = instance.num_legs();
  const double nu = instance.nu();
  v_min_out.resize(static_cast<std::size_t>(n));
  v_max_out.resize(static_cast<std::size_t>(n));
  double wc = 0.0, wmax = 0.0;
  for (int i = 0; i < n; ++i) {
    wc += report.per_city_compulsory_weight[static_cast<std::size_t>(i)];
    wmax += report.per_city_max_weight[static_cast<std::size_t>(i)];
    v_max_out[static_cast<std::size_t>(i)] = instance.v_max() - nu * wc;
    v_min_out[static_cast<std::size_t>(i)] =
        instance.v_max() - nu * std::min(wmax, instance.capacity());
  }
}

SegmentSet build_segment_set(const Instance& instance, const PreprocessReport& report,
                             int tau) {
  SegmentSet s;
  s.tau = tau;
  s.breakpoints = build_segments(instance.v_min(), instance.v_max(), tau);
  city_velocity_ranges(instance, report, s.city_v_min, s.city_v_max);

  const int n = instance.num_legs();
  s.active_segments.resize(static_cast<std::size_t>(n));
  s.active_breakpoints.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lo = s.city_v_min[static_cast<std::size_t>(i)];
    const double hi = s.city_v_max[static_cast<std::size_t>(i)];
    // Segment a spans velocities [v_{a+1}, v_a]; keep it when the span
    // intersects [lo, hi]. Intersection (not endpoint membership) also keeps
    // a segment that strictly contains the whole range.
    for (int a = 0; a < tau; ++a) {
      const double seg_hi = s.breakpoints[static_cast<std::size_t>(a)].velocity;
      const double seg_lo = s.breakpoints[static_cast<std::size_t>(a) + 1].velocity;
      if (seg_lo <= hi && seg_hi >= lo)
        s.active_segments[static_cast<std::size_t>(i)].push_back(a);
    }
    auto& bi = s.active_breakpoints[static_cast<std::size_t>(i)];
    for (int a : s.active_segments[static_cast<std::size_t>(i)]) {
      if (bi.empty() || bi.back() != a) bi.push_back(a);
      bi.push_back(a + 1);
    }
  }
  return s;
}

double beta(const SegmentSet& segments) {
  std::size_t total = 0;
  for (const auto& bi : segments.active_breakpoints) total += bi.size();
  return 100.0 * static_cast<double>(total) /
         (static_cast<double>(segments.tau) *
          static_cast<double>(segments.active_breakpoints.size()));
}

MipModel build_ankp(const Instance& instance, const PreprocessReport& report, int tau) {
  const int n = instance.num_legs();
  const double nu = instance.nu();
  const SegmentSet segs = build_segment_set(instance, report, tau);

  MipModel model;
  std::vector<VarId> x_ids;
  for (std::size_t g : report.remaining) {
    const Item& it = instance.item(g);
    x_ids.push_back(model.add_binary("x_" + std::to_string(it.city) + "_" +
                                     std::to_string(it.slot)));
  }
  std::vector<std::vector<VarId>> y_ids(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int b : segs.active_breakpoints[static_cast<std::size_t>(i - 1)])
      y_ids[static_cast<std::size_t>(i - 1)].push_back(model.add_continuous(
          "y_" + std::to_string(i) + "_" + std::to_string(b), 0.0, 1.0));
  std::vector<VarId> p_ids, w_ids;
  for (int i = 1; i <= n; ++i) p_ids.push_back(model.add_free("p_" + std::to_string(i)));
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i)
    w_ids.push_back(model.add_continuous("w_" + std::to_string(i), 0.0, inf));

  for (int i = 1; i <= n; ++i) {
    const std::size_t ci = static_cast<std::size_t>(i - 1);
    const auto& bi = segs.active_breakpoints[ci];

    // p_i = p_{i-1} + p_i^c + sum p x - R d_i sum t_b y_ib  (p_0 = 0)
    std::vector<LinearTerm> prof{{1.0, p_ids[ci]}};
    if (i > 1) prof.push_back({-1.0, p_ids[ci - 1]});
    for (std::size_t r = 0; r < report.remaining.size(); ++r) {
      const Item& it = instance.item(report.remaining[r]);
      if (it.city == i) prof.push_back({-it.profit, x_ids[r]});
    }
    for (std::size_t k = 0; k < bi.size(); ++k)
      prof.push_back(
          {instance.rent() * instance.distance(i) *
               segs.breakpoints[static_cast<std::size_t>(bi[k])].time,
           y_ids[ci][k]});
    model.add_constraint("prof_" + std::to_string(i), std::move(prof), Sense::Equal,
                         report.per_city_compulsory_profit[ci]);

    // w_i = w_{i-1} + w_i^c + sum w x  (w_0 = 0)
    std::vector<LinearTerm> wgt{{1.0, w_ids[ci]}};
    if (i > 1) wgt.push_back({-1.0, w_ids[ci - 1]});
    for (std::size_t r = 0; r < report.remaining.size(); ++r) {
      const Item& it = instance.item(report.remaining[r]);
      if (it.city == i) wgt.push_back({-it.weight, x_ids[r]});
    }
    model.add_constraint("wgt_" + std::to_string(i), std::move(wgt), Sense::Equal,
                         report.per_city_compulsory_weight[ci]);

    // nu w_i + sum v_b y_ib = v_max
    std::vector<LinearTerm> seg{{nu, w_ids[ci]}};
    for (std::size_t k = 0; k < bi.size(); ++k)
      seg.push_back({segs.breakpoints[static_cast<std::size_t>(bi[k])].velocity,
                     y_ids[ci][k]});
    model.add_constraint("seg_" + std::to_string(i), std::move(seg), Sense::Equal,
                         instance.v_max());

    // sum y_ib = 1
    std::vector<LinearTerm> cvx;
    for (std::size_t k = 0; k < bi.size(); ++k) cvx.push_back({1.0, y_ids[ci][k]});
    model.add_constraint("cvx_" + std::to_string(i), std::move(cvx), Sense::Equal, 1.0);
  }

  model.add_constraint("cap", {{1.0, w_ids[static_cast<std::size_t>(n - 1)]}},
                       Sense::LessEqual, instance.capacity());
  model.set_objective({{1.0, p_ids[static_cast<std::size_t>(n - 1)]}});
  return model;
}

EvalResult recompute_exact(const Instance& instance, const PackingPlan& plan) {
  return evaluate(instance, plan);
}

double chord_time(const SegmentSet& segments, int city, double velocity) {
  const auto& bi = segments.active_breakpoints.at(static_cast<std::size_t>(city - 1));
  if (bi.empty()) throw Error("no active breakpoints for city");
  const auto& bp = segments.breakpoints;
  const double v_hi = bp[static_cast<std::size_t>(bi.front())].velocity;
  const double v_lo = bp[static_cast<std::size_t>(bi.back())].velocity;
  const double v = std::clamp(velocity, v_lo, v_hi);
  for (std::size_t k = 0; k + 1 < bi.size(); ++k) {
    const Breakpoint& hi = bp[static_cast<std::size_t>(bi[k])];
    const Breakpoint& lo = bp[static_cast<std::size_t>(bi[k + 1])];
    if (v >= lo.velocity) {
      const double frac = (hi.velocity - v) / (hi.velocity - lo.velocity);
      return hi.time + frac * (lo.time - hi.time);
    }
  }
  return bp[static_cast<std::size_t>(bi.back())].time;
}

double model_objective_for_plan(const Instance& instance,
                                const PreprocessReport& report,
                                const SegmentSet& segments, const PackingPlan& plan) {
  (void)report;
  const EvalResult exact = evaluate(instance, plan);
  double approx_cost = 0.0;
  for (int i = 1; i <= instance.num_legs(); ++i)
    approx_cost += instance.rent() * instance.distance(i) *
                   chord_time(segments, i, exact.per_leg_velocity[static_cast<std::size_t>(i - 1)]);
  return exact.total_profit - approx_cost;
}

double approximation_error_bound(const std::vector<Breakpoint>& breakpoints) {
  double worst = 0.0;
  for (std::size_t a = 0; a + 1 < breakpoints.size(); ++a) {
    const Breakpoint& hi = breakpoints[a];      // faster endpoint
    const Breakpoint& lo = breakpoints[a + 1];  // slower endpoint
    const double v_star = std::sqrt(lo.velocity * hi.velocity);
    const double frac = (hi.velocity - v_star) / (hi.velocity - lo.velocity);
    const double chord = hi.time + frac * (lo.time - hi.time);
    worst = std::max(worst, chord - 1.0 / v_star);
  }
  return worst;
}

}  // namespace pwt
