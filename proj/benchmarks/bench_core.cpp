#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pwt/ankp.hpp"
#include "pwt/bnb.hpp"
#include "pwt/enkp.hpp"
#include "pwt/mip.hpp"
#include "pwt/preprocess.hpp"

using namespace pwt;

namespace {

// Deterministic instance generator mirroring the test corpus, scaled up by
// the benchmark argument.
Instance make_instance(int num_items, unsigned seed = 42) {
  std::mt19937 rng(seed);
  const int n = 5;
  std::uniform_real_distribution<double> d_dist(1.0, 20.0);
  std::vector<double> distances;
  for (int i = 0; i < n; ++i) distances.push_back(d_dist(rng));

  std::uniform_int_distribution<int> city_dist(1, n);
  std::uniform_int_distribution<int> w_dist(1, 30);
  std::uniform_int_distribution<int> p_dist(1, 30);
  std::vector<std::vector<Item>> per_city(n);
  double total_weight = 0.0;
  for (int k = 0; k < num_items; ++k) {
    const int city = city_dist(rng);
    const double w = w_dist(rng);
    per_city[static_cast<std::size_t>(city - 1)].push_back(
        {static_cast<double>(p_dist(rng)), w, 0, 0});
    total_weight += w;
  }
  return Instance(std::move(distances), std::move(per_city), 0.6 * total_weight,
                  0.1, 1.0, 2.0);
}

void BM_Evaluate(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PackingPlan plan(inst.num_items());
  for (std::size_t g = 0; g < inst.num_items(); g += 2) plan.set(g, true);
  for (auto _ : state) {
    EvalResult r = evaluate(inst, plan);
    benchmark::DoNotOptimize(r.objective);
  }
}
BENCHMARK(BM_Evaluate)->Arg(10)->Arg(100)->Arg(1000);

void BM_Preprocess(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PreprocessReport rep = preprocess(inst);
    benchmark::DoNotOptimize(rep.alpha);
  }
}
BENCHMARK(BM_Preprocess)->Arg(10)->Arg(50)->Arg(100);

void BM_SolveBB(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PreprocessReport rep = preprocess(inst);
  for (auto _ : state) {
    SolveResult r = solve_bb(inst, rep);
    benchmark::DoNotOptimize(r.best_objective);
  }
}
BENCHMARK(BM_SolveBB)->Arg(10)->Arg(14)->Arg(18);

void BM_SolveBBFractional(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PreprocessReport rep = preprocess(inst);
  SolveLimits limits;
  limits.fractional_bound = true;
  for (auto _ : state) {
    SolveResult r = solve_bb(inst, rep, limits);
    benchmark::DoNotOptimize(r.best_objective);
  }
}
BENCHMARK(BM_SolveBBFractional)->Arg(10)->Arg(14)->Arg(18);

void BM_BuildEnkp(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PreprocessReport rep = preprocess(inst);
  for (auto _ : state) {
    MipModel model = build_enkp(inst, rep, {true, true});
    benchmark::DoNotOptimize(model.variables().size());
  }
}
BENCHMARK(BM_BuildEnkp)->Arg(10)->Arg(50)->Arg(100);

void BM_BuildAnkp(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PreprocessReport rep = preprocess(inst);
  for (auto _ : state) {
    MipModel model = build_ankp(inst, rep, 100);
    benchmark::DoNotOptimize(model.variables().size());
  }
}
BENCHMARK(BM_BuildAnkp)->Arg(10)->Arg(50)->Arg(100);

void BM_WriteLp(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  PreprocessReport rep = preprocess(inst);
  MipModel model = build_enkp(inst, rep);
  for (auto _ : state) {
    std::string lp = write_lp_string(model);
    benchmark::DoNotOptimize(lp.size());
  }
}
BENCHMARK(BM_WriteLp)->Arg(10)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
