#include <benchmark/benchmark.h>

#include "gerbel/carriers.hpp"

using namespace gerbel;

static void BM_fuse_standard_m3(benchmark::State& state) {
  StarAlgebra a = carriers::m3();
  Bimodule st = standard_bimodule(a);
  for (auto _ : state) benchmark::DoNotOptimize(fuse(st, st));
}
BENCHMARK(BM_fuse_standard_m3);

static void BM_fuse_triple_m2(benchmark::State& state) {
  StarAlgebra a = carriers::m2();
  Bimodule st = standard_bimodule(a);
  for (auto _ : state) benchmark::DoNotOptimize(fuse_triple(st, st, st));
}
BENCHMARK(BM_fuse_triple_m2);

static void BM_check_gerbe(benchmark::State& state) {
  carriers::CentralExtensionScenario s;
  BundleGerbe q = s.make_gerbe();
  for (auto _ : state) benchmark::DoNotOptimize(check_gerbe(q));
}
BENCHMARK(BM_check_gerbe);

static void BM_associate(benchmark::State& state) {
  carriers::CentralExtensionScenario s;
  BundleGerbe q = s.make_gerbe();
  for (auto _ : state) benchmark::DoNotOptimize(associate(q, s.rep));
}
BENCHMARK(BM_associate);

static void BM_check_two_vector_bundle(benchmark::State& state) {
  carriers::CentralExtensionScenario s;
  BundleGerbe q = s.make_gerbe();
  TwoVectorBundle v = associate(q, s.rep);
  for (auto _ : state) benchmark::DoNotOptimize(check_two_vector_bundle(v));
}
BENCHMARK(BM_check_two_vector_bundle);

BENCHMARK_MAIN();
