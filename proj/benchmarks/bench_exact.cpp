#include <benchmark/benchmark.h>

#include "uclab/asymptotics.hpp"
#include "uclab/construction.hpp"

namespace {

// Class-counting metrics at sweep scale; arg is the exponent of n_target.
void BM_ExactMetricsAtScale(benchmark::State& state) {
  const uclab::BlockParams p = uclab::plan_params(std::size_t{1} << state.range(0));
  std::size_t den_bits = 0;
  for (auto _ : state) {
    const uclab::BlockMetrics r = uclab::exact_metrics(p);
    den_bits = mpz_sizeinbase(r.aod.den().get_mpz_t(), 2);
    benchmark::DoNotOptimize(den_bits);
  }
  state.counters["m"] = static_cast<double>(p.m);
  state.counters["aod_den_bits"] = static_cast<double>(den_bits);
}
BENCHMARK(BM_ExactMetricsAtScale)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyBounds(benchmark::State& state) {
  const uclab::BlockParams p = uclab::plan_params(std::size_t{1} << state.range(0));
  const uclab::BlockMetrics r = uclab::exact_metrics(p);
  for (auto _ : state) benchmark::DoNotOptimize(uclab::verify_bounds(p, r).all_true());
}
BENCHMARK(BM_VerifyBounds)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_CanonicalSweep(benchmark::State& state) {
  const auto targets = uclab::power_of_two_targets(7, 24);
  for (auto _ : state) benchmark::DoNotOptimize(uclab::sweep(targets).size());
}
BENCHMARK(BM_CanonicalSweep)->Unit(benchmark::kMillisecond);

}  // namespace
