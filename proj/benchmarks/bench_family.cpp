#include <benchmark/benchmark.h>

#include "uclab/construction.hpp"
#include "uclab/family.hpp"
#include "uclab/metrics.hpp"

namespace {

using uclab::BlockParams;

// args: k, m, s
void BM_UnionClosureOfBlockGenerators(benchmark::State& state) {
  const BlockParams p{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                      static_cast<std::size_t>(state.range(2))};
  const auto bf = uclab::build_block_family(p);
  const auto gens = bf.generators();
  std::size_t size = 0;
  for (auto _ : state) {
    const uclab::Family f = uclab::union_closure(gens, p.n());
    size = f.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["sets"] = static_cast<double>(size);
}
// Worklist closure is quadratic in |F|; larger cells go through materialize.
BENCHMARK(BM_UnionClosureOfBlockGenerators)->Args({6, 3, 4})->Args({9, 4, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Materialize(benchmark::State& state) {
  const auto bf = uclab::build_block_family({static_cast<std::size_t>(state.range(0)), 4, 4});
  for (auto _ : state) benchmark::DoNotOptimize(uclab::materialize(bf).size());
}
BENCHMARK(BM_Materialize)->Arg(9)->Arg(40)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_AodPairwise(benchmark::State& state) {
  const uclab::Family f = uclab::materialize(uclab::build_block_family({9, 4, 3}));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::aod(f, uclab::AodMethod::Pairwise, workers));
  }
  state.counters["sets"] = static_cast<double>(f.size());
}
BENCHMARK(BM_AodPairwise)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_AodGammaWeighted(benchmark::State& state) {
  const uclab::Family f = uclab::materialize(uclab::build_block_family({9, 4, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(uclab::aod(f, uclab::AodMethod::GammaWeighted));
}
BENCHMARK(BM_AodGammaWeighted)->Unit(benchmark::kMillisecond);

void BM_SeparatesPoints(benchmark::State& state) {
  const uclab::Family f =
      uclab::augment_cosingletons(uclab::materialize(uclab::build_block_family({9, 4, 3})));
  for (auto _ : state) benchmark::DoNotOptimize(uclab::separates_points(f).separates);
}
BENCHMARK(BM_SeparatesPoints)->Unit(benchmark::kMillisecond);

}  // namespace
