#include <benchmark/benchmark.h>

#include <random>

#include "ramsey/hales_jewett.hpp"
#include "ramsey/lift.hpp"
#include "ramsey/linalg.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

Shape sum_shape() {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(-1)})}};
  s.canonicalize();
  return s;
}

Shape ap3_shape() {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(1)}),
                 PolyMap::linear_form({Int(2)})}};
  s.canonicalize();
  return s;
}

IntMatrix random_square(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (auto& x : m.a) x = Int(long(rng() % 21) - 10);
  return m;
}

}  // namespace

static void bm_sum_number(benchmark::State& state) {
  Shape s = sum_shape();
  SearchBudget budget;
  for (auto _ : state) {
    auto pr = min_partition_number(s, all_lines(s), 2, 5, budget);
    benchmark::DoNotOptimize(pr);
  }
}
BENCHMARK(bm_sum_number);

static void bm_progression_number(benchmark::State& state) {
  Shape s = ap3_shape();
  SearchBudget budget;
  for (auto _ : state) {
    auto pr = min_partition_number(s, {1}, 2, 9, budget);
    benchmark::DoNotOptimize(pr);
  }
}
BENCHMARK(bm_progression_number);

static void bm_enumerate_progressions(benchmark::State& state) {
  Shape s = ap3_shape();
  SearchBudget budget;
  for (auto _ : state) {
    auto ce = enumerate_configs(s, {1}, state.range(0), budget);
    benchmark::DoNotOptimize(ce);
  }
}
BENCHMARK(bm_enumerate_progressions)->Arg(16)->Arg(64)->Arg(256);

static void bm_decide_bad_coloring(benchmark::State& state) {
  Shape s = sum_shape();
  SearchBudget budget;
  auto ce = enumerate_configs(s, all_lines(s), state.range(0), budget);
  std::vector<std::vector<int>> cfgs;
  for (const auto& c : ce.configs) {
    std::vector<int> cfg;
    for (long p : c.points) cfg.push_back(int(p - 1));
    cfgs.push_back(cfg);
  }
  for (auto _ : state) {
    auto bad = find_bad_coloring(size_t(state.range(0)), cfgs, 2, budget);
    benchmark::DoNotOptimize(bad);
  }
}
BENCHMARK(bm_decide_bad_coloring)->Arg(4)->Arg(5);

static void bm_word_cube_number(benchmark::State& state) {
  SearchBudget budget;
  for (auto _ : state) {
    auto hr = hj_number(2, 2, 2, budget);
    benchmark::DoNotOptimize(hr);
  }
}
BENCHMARK(bm_word_cube_number);

static void bm_generate_mpc(benchmark::State& state) {
  Shape s = from_mpc(int(state.range(0)), 2, Int(2));
  SeedVector seed(state.range(0) + 1);
  for (size_t i = 0; i < seed.size(); ++i) seed[i] = {Int(long(i) + 1)};
  for (auto _ : state) {
    auto cs = generate(s, seed);
    benchmark::DoNotOptimize(cs);
  }
}
BENCHMARK(bm_generate_mpc)->Arg(2)->Arg(3)->Arg(4);

static void bm_lift_exhaustive(benchmark::State& state) {
  Shape s;
  s.d = 1;
  s.m = 1;
  s.c = IntMatrix(1, 1, {Int(1)});
  s.families = {{PolyMap::zero(1, 1), PolyMap::linear_form({Int(1)})}};
  s.canonicalize();
  LiftPlan plan = lift(s, 2, 0);
  SeedVector t = {{Int(1)}, {Int(2)}, {Int(4)}};
  SearchBudget budget;
  for (auto _ : state) {
    auto rep = verify_lift_exhaustive(plan, t, budget);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(bm_lift_exhaustive);

static void bm_determinant(benchmark::State& state) {
  IntMatrix m = random_square(int(state.range(0)), 11);
  for (auto _ : state) {
    Int d = determinant(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_determinant)->Arg(4)->Arg(8);

static void bm_smith(benchmark::State& state) {
  IntMatrix m = random_square(int(state.range(0)), 23);
  for (auto _ : state) {
    auto s = smith_diagonal(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_smith)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
