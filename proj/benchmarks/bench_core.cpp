#include <benchmark/benchmark.h>

#include "gfss/allocation.hpp"
#include "gfss/block_laws.hpp"
#include "gfss/eppf.hpp"
#include "gfss/hypergeom.hpp"
#include "gfss/models.hpp"
#include "gfss/structural.hpp"

using namespace gfss;

namespace {

const GnedinFisherPsi& model() {
  static const GnedinFisherPsi m(Rational(4, 5), Rational(3, 10));
  return m;
}

void BM_EppfExact(benchmark::State& state) {
  const OccupancyCounts counts({5, 3, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(eppf(model(), counts));
}
BENCHMARK(BM_EppfExact);

void BM_WeightExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(model().weight(n, n / 2 + 1));
}
BENCHMARK(BM_WeightExact)->Arg(10)->Arg(50)->Arg(200);

void BM_BlocksLogPmf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blocks_log_pmf(model(), n));
}
BENCHMARK(BM_BlocksLogPmf)->Arg(100)->Arg(2000);

void BM_NormalizationOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_normalization(model(), n));
}
BENCHMARK(BM_NormalizationOracle)->Arg(6)->Arg(8);

void BM_Gauss2F1(benchmark::State& state) {
  const double x = 1.0 - 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_2f1(1.7, 1.5, 2.0, x));
}
BENCHMARK(BM_Gauss2F1)->Arg(4)->Arg(20)->Arg(100);

void BM_StructuralDensity(benchmark::State& state) {
  const double y = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structural_density(model(), y));
}
BENCHMARK(BM_StructuralDensity)->Arg(2)->Arg(100)->Arg(100000);

void BM_SequentialSampler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream stream(1234);
  for (auto _ : state) benchmark::DoNotOptimize(sample_sequential(model(), n, stream));
}
BENCHMARK(BM_SequentialSampler)->Arg(10)->Arg(100);

void BM_TwoStageSampler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const XiSampler xi_sampler(model());
  RandomStream stream(1234);
  for (auto _ : state) benchmark::DoNotOptimize(sample_two_stage(n, xi_sampler, stream));
}
BENCHMARK(BM_TwoStageSampler)->Arg(10)->Arg(100);

void BM_XiPriorPmf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(xi_prior_pmf(model(), 1000000));
}
BENCHMARK(BM_XiPriorPmf);

}  // namespace

BENCHMARK_MAIN();
