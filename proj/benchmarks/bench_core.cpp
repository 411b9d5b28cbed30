#include <benchmark/benchmark.h>

#include "goldenk3/certifier.hpp"
#include "goldenk3/disc_group.hpp"
#include "goldenk3/golden_ring.hpp"
#include "goldenk3/quad_lattice.hpp"
#include "goldenk3/surface_model.hpp"

using namespace goldenk3;

static void BM_Snf(benchmark::State& state) {
  const GramForm g = golden_family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(snf(g));
}
BENCHMARK(BM_Snf)->Arg(2)->Arg(1000)->Arg(1000000);

static void BM_SolveNormEquation(benchmark::State& state) {
  const Integer m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_norm_equation(m));
}
BENCHMARK(BM_SolveNormEquation)->Arg(1)->Arg(1000)->Arg(100000);

static void BM_Represents(benchmark::State& state) {
  const GramForm g = golden_family(2);
  for (auto _ : state) {
    for (int c = -50; c <= 50; ++c) benchmark::DoNotOptimize(represents(g, c));
  }
}
BENCHMARK(BM_Represents);

static void BM_DiscriminantGroup(benchmark::State& state) {
  const GramForm g = golden_family(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_group(g));
}
BENCHMARK(BM_DiscriminantGroup)->Arg(2)->Arg(997);

static void BM_Certify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify(2));
}
BENCHMARK(BM_Certify);

static void BM_FamilyScan(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(family_scan(-n, n, 1));
}
BENCHMARK(BM_FamilyScan)->Arg(10)->Arg(100);

static void BM_LefschetzPower(benchmark::State& state) {
  const K3Model m = K3Model::create(golden_family(2), mult_matrix(eta_pow(6)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(topological_lefschetz(m, state.range(0)));
}
BENCHMARK(BM_LefschetzPower)->Arg(1)->Arg(100)->Arg(10000);
BENCHMARK_MAIN();
