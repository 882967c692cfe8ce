#include <doctest.h>

#include <cmath>
#include <random>

#include "pwt/bnb.hpp"
#include "pwt/reduction.hpp"

using namespace pwt;

namespace {

bool ssp_brute_force(const SspInstance& ssp) {
  const std::size_t q = ssp.values.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < q; ++k)
      if (mask & (std::uint64_t{1} << k)) sum += ssp.values[k];
    if (sum == ssp.target) return true;
  }
  return false;
}

bool nkpu_decision(const SspReduction& red) {
  return solve_oracle(red.instance).best_objective >= red.threshold_b - 1e-9;
}

}  // namespace

TEST_CASE("reduction of S={3,5,7}") {
  SspReduction yes = ssp_to_nkpu({{3, 5, 7}, 8});
  CHECK(yes.instance.capacity() == 15.0);
  CHECK(yes.instance.rent() == doctest::Approx(484.0 / 15.0).epsilon(1e-12));
  CHECK(yes.instance.nu() == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
  CHECK(yes.threshold_b == -14.0);

  // Selecting {3, 5} hits the target exactly.
  PackingPlan plan(3);
  plan.set(0, true);
  plan.set(1, true);
  CHECK(evaluate(yes.instance, plan).objective ==
        doctest::Approx(-14.0).epsilon(1e-12));
  CHECK(nkpu_decision(yes));

  SspReduction no = ssp_to_nkpu({{3, 5, 7}, 4});
  CHECK(no.threshold_b == -22.0);
  CHECK_FALSE(nkpu_decision(no));

  SspReduction single = ssp_to_nkpu({{8}, 8});
  CHECK(nkpu_decision(single));
}

TEST_CASE("f_rstar closed form and maximizer") {
  const double w_cap = 15.0;
  const double q = 8.0;
  const double rstar = w_cap * (2.0 - q / w_cap) * (2.0 - q / w_cap);

  CHECK(f_rstar(q, w_cap, rstar) == doctest::Approx(2.0 * (q - w_cap)).epsilon(1e-12));
  CHECK(f_rstar(0.0, w_cap, rstar) == doctest::Approx(-rstar / 2.0).epsilon(1e-12));

  const double w_star = w_cap * (2.0 - std::sqrt(rstar / w_cap));
  CHECK(w_star == doctest::Approx(q).epsilon(1e-12));
  for (double delta : {0.5, 1.0}) {
    CHECK(f_rstar(q + delta, w_cap, rstar) < f_rstar(q, w_cap, rstar));
    CHECK(f_rstar(q - delta, w_cap, rstar) < f_rstar(q, w_cap, rstar));
  }

  CHECK_THROWS_AS(f_rstar(-1.0, w_cap, rstar), Error);
  CHECK_THROWS_AS(f_rstar(w_cap + 1.0, w_cap, rstar), Error);
}

TEST_CASE("the reduction is faithful to the closed-form objective") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> q_dist(1, 10);
  std::uniform_int_distribution<std::int64_t> s_dist(1, 50);
  for (int trial = 0; trial < 30; ++trial) {
    SspInstance ssp;
    const int q = q_dist(rng);
    std::int64_t total = 0;
    for (int k = 0; k < q; ++k) {
      ssp.values.push_back(s_dist(rng));
      total += ssp.values.back();
    }
    ssp.target = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(total));
    SspReduction red = ssp_to_nkpu(ssp);

    // g(x) of the construction equals the instance objective for every x.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
      PackingPlan plan(static_cast<std::size_t>(q));
      double psum = 0.0, wsum = 0.0;
      for (int k = 0; k < q; ++k)
        if (mask & (std::uint64_t{1} << k)) {
          plan.set(static_cast<std::size_t>(k), true);
          psum += static_cast<double>(ssp.values[static_cast<std::size_t>(k)]);
          wsum += static_cast<double>(ssp.values[static_cast<std::size_t>(k)]);
        }
      const double g = psum - red.instance.rent() /
                                  (2.0 - wsum / red.instance.capacity());
      CHECK(evaluate(red.instance, plan).objective == doctest::Approx(g).epsilon(1e-9));
    }

    // Decision equivalence with subset-sum brute force.
    CHECK(nkpu_decision(red) == ssp_brute_force(ssp));

    // f peaks at the target over achievable integer weights.
    const double fq = f_rstar(static_cast<double>(ssp.target),
                              red.instance.capacity(), red.instance.rent());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
      std::int64_t sum = 0;
      for (int k = 0; k < q; ++k)
        if (mask & (std::uint64_t{1} << k)) sum += ssp.values[static_cast<std::size_t>(k)];
      if (sum == ssp.target) continue;
      CHECK(f_rstar(static_cast<double>(sum), red.instance.capacity(),
                    red.instance.rent()) < fq);
    }
  }
}

TEST_CASE("invalid subset-sum inputs") {
  CHECK_THROWS_AS(ssp_to_nkpu({{}, 5}), Error);
  CHECK_THROWS_AS(ssp_to_nkpu({{3, 5}, 9}), Error);
  CHECK_THROWS_AS(ssp_to_nkpu({{3, -1}, 2}), Error);
  CHECK_THROWS_AS(ssp_to_nkpu({{3, 5}, 0}), Error);
}
