#include <doctest.h>

#include <random>

#include "pwt/ankp.hpp"
#include "pwt/bnb.hpp"
#include "support.hpp"

using namespace pwt;
using testing::random_instance;
using testing::tiny1;

namespace {

PreprocessReport all_free_report(const Instance& inst) {
  PreprocessReport report;
  const int n = inst.num_legs();
  report.per_city_compulsory_profit.assign(static_cast<std::size_t>(n), 0.0);
  report.per_city_compulsory_weight.assign(static_cast<std::size_t>(n), 0.0);
  report.per_city_max_weight.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t g = 0; g < inst.num_items(); ++g) {
    report.remaining.push_back(g);
    const Item& it = inst.item(g);
    report.per_city_max_weight[static_cast<std::size_t>(it.city - 1)] += it.weight;
  }
  return report;
}

PackingPlan random_feasible_plan(const Instance& inst, const PreprocessReport& report,
                                 std::mt19937& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PackingPlan plan(inst.num_items());
    double weight = 0.0;
    for (std::size_t g : report.compulsory) plan.set(g, true);
    for (std::size_t g : report.remaining) plan.set(g, bit(rng) != 0);
    for (std::size_t g = 0; g < inst.num_items(); ++g)
      if (plan.selected(g)) weight += inst.item(g).weight;
    if (weight <= inst.capacity()) return plan;
  }
  // Compulsory items alone always fit once preprocessing succeeded.
  PackingPlan plan(inst.num_items());
  for (std::size_t g : report.compulsory) plan.set(g, true);
  return plan;
}

}  // namespace

TEST_CASE("breakpoints are equally spaced in time") {
  auto bps = build_segments(0.1, 1.0, 3);
  REQUIRE(bps.size() == 4);
  const double expected_t[] = {1.0, 4.0, 7.0, 10.0};
  for (int b = 0; b < 4; ++b) {
    CHECK(bps[static_cast<std::size_t>(b)].time ==
          doctest::Approx(expected_t[b]).epsilon(1e-12));
    CHECK(bps[static_cast<std::size_t>(b)].velocity ==
          doctest::Approx(1.0 / expected_t[b]).epsilon(1e-12));
  }
  // Endpoints are pinned exactly.
  CHECK(bps.front().velocity == 1.0);
  CHECK(bps.back().velocity == 0.1);

  auto fine = build_segments(0.1, 1.0, 100);
  REQUIRE(fine.size() == 101);
  for (std::size_t b = 0; b + 1 < fine.size(); ++b)
    CHECK(fine[b + 1].time - fine[b].time == doctest::Approx(0.09).epsilon(1e-12));

  CHECK_THROWS_AS(build_segments(0.1, 1.0, 0), Error);
  CHECK_THROWS_AS(build_segments(1.0, 0.1, 3), Error);
}

TEST_CASE("velocity ranges and active sets on TINY1") {
  Instance inst = tiny1();
  PreprocessReport report = all_free_report(inst);
  std::vector<double> lo, hi;
  city_velocity_ranges(inst, report, lo, hi);
  CHECK(hi[0] == 1.0);
  CHECK(lo[0] == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(hi[1] == 1.0);
  CHECK(lo[1] == doctest::Approx(0.19).epsilon(1e-12));

  SegmentSet s = build_segment_set(inst, report, 3);
  // Leg 1 range [0.37, 1] touches only segment 0 ([0.25, 1]).
  CHECK(s.active_segments[0] == std::vector<int>{0});
  CHECK(s.active_breakpoints[0] == std::vector<int>{0, 1});
  // Leg 2 range [0.19, 1] also reaches segment 1 ([1/7, 0.25]).
  CHECK(s.active_segments[1] == std::vector<int>{0, 1});
  CHECK(s.active_breakpoints[1] == std::vector<int>{0, 1, 2});
  CHECK(beta(s) == doctest::Approx(100.0 * 5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("compulsory load narrows the reachable range") {
  Instance inst = tiny1();
  PreprocessReport report = preprocess(inst);  // e11, e21 compulsory, e12 gone
  std::vector<double> lo, hi;
  city_velocity_ranges(inst, report, lo, hi);
  CHECK(hi[0] == doctest::Approx(0.73).epsilon(1e-12));
  CHECK(lo[0] == doctest::Approx(0.73).epsilon(1e-12));
  CHECK(hi[1] == doctest::Approx(0.55).epsilon(1e-12));
  CHECK(lo[1] == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("TINY1 model shape and naming") {
  Instance inst = tiny1();
  PreprocessReport report = all_free_report(inst);
  MipModel model = build_ankp(inst, report, 3);
  // 3 x + (2 + 3) y + 2 p + 2 w
  CHECK(model.variables().size() == 12);
  // 4 rows per leg + capacity
  CHECK(model.constraints().size() == 9);
  CHECK(model.has_variable("y_1_0"));
  CHECK(model.has_variable("y_2_2"));
  CHECK_FALSE(model.has_variable("y_1_2"));
  // Objective is the final profit variable alone.
  REQUIRE(model.objective_terms().size() == 1);
  CHECK(model.variables()[model.objective_terms()[0].variable].name == "p_2");
}

TEST_CASE("chord interpolation") {
  Instance inst = tiny1();
  SegmentSet s = build_segment_set(inst, all_free_report(inst), 3);
  // Breakpoint velocities are exact.
  CHECK(chord_time(s, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chord_time(s, 2, 0.25) == doctest::Approx(4.0).epsilon(1e-12));
  // Interior points land on the chord, above 1/v.
  const double mid = chord_time(s, 1, 0.5);
  CHECK(mid == doctest::Approx(1.0 + (1.0 - 0.5) / (1.0 - 0.25) * 3.0).epsilon(1e-12));
  CHECK(mid >= 1.0 / 0.5);
}

TEST_CASE("empty plan on TINY1 gives p_n = -2") {
  Instance inst = tiny1();
  PreprocessReport report = all_free_report(inst);
  SegmentSet s = build_segment_set(inst, report, 3);
  PackingPlan plan(3);
  CHECK(model_objective_for_plan(inst, report, s, plan) ==
        doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("model objective lower-bounds the exact objective") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_instance(rng, 8);
    PreprocessReport report = preprocess(inst);
    for (int tau : {3, 10, 100}) {
      SegmentSet s = build_segment_set(inst, report, tau);
      PackingPlan plan = random_feasible_plan(inst, report, rng);
      const double approx = model_objective_for_plan(inst, report, s, plan);
      const double exact = recompute_exact(inst, plan).objective;
      CHECK(approx <= exact + 1e-9);
    }
  }
}

TEST_CASE("error bound values and refinement") {
  auto coarse = build_segments(0.1, 1.0, 1);
  CHECK(approximation_error_bound(coarse) == doctest::Approx(4.67544).epsilon(1e-4));

  double prev = approximation_error_bound(coarse);
  for (int tau : {2, 4, 8, 16, 32}) {
    const double cur = approximation_error_bound(build_segments(0.1, 1.0, tau));
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("error bound caps the objective gap") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Instance inst = random_instance(rng, 8);
    PreprocessReport report = preprocess(inst);
    SegmentSet s = build_segment_set(inst, report, 10);
    const double eps = approximation_error_bound(s.breakpoints);
    double total_rd = 0.0;
    for (int i = 1; i <= inst.num_legs(); ++i)
      total_rd += inst.rent() * inst.distance(i);
    PackingPlan plan = random_feasible_plan(inst, report, rng);
    const double gap = recompute_exact(inst, plan).objective -
                       model_objective_for_plan(inst, report, s, plan);
    CHECK(gap >= -1e-9);
    CHECK(gap <= eps * total_rd + 1e-9);
  }
}

TEST_CASE("beta stays within its trivial bounds") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = random_instance(rng, 8);
    PreprocessReport report = preprocess(inst);
    for (int tau : {3, 10}) {
      SegmentSet s = build_segment_set(inst, report, tau);
      const double b = beta(s);
      CHECK(b > 0.0);
      CHECK(b <= 100.0 * (tau + 1.0) / tau + 1e-12);
    }
  }
}

TEST_CASE("larger capacity never grows beta") {
  // nu = (v_max - v_min) / W, so with fixed items a larger W means lighter
  // relative loads, velocities pinned near v_max, and fewer active segments.
  std::vector<std::vector<Item>> items{{{5.0, 4.0, 0, 0}, {3.0, 6.0, 0, 0}},
                                       {{2.0, 5.0, 0, 0}}};
  double prev = std::numeric_limits<double>::infinity();
  for (double w_cap : {6.0, 9.0, 12.0, 15.0, 30.0}) {
    Instance inst({1.0, 1.0}, items, w_cap, 0.1, 1.0, 1.0);
    SegmentSet s = build_segment_set(inst, all_free_report(inst), 10);
    const double b = beta(s);
    CHECK(b <= prev);
    prev = b;
  }
}
