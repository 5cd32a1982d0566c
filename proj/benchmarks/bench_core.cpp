#include <benchmark/benchmark.h>

#include "odca/analysis.hpp"
#include "odca/equiv.hpp"
#include "odca/model.hpp"
#include "odca/oracle.hpp"
#include "odca/reach.hpp"

namespace {

odca::Word cycle_word(std::size_t letters, std::size_t len) {
  odca::Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(i % letters);
  return w;
}

void BM_eval(benchmark::State& state) {
  const odca::WeightedOdca m = odca::random_odca(4, 3, 2, 7);
  const odca::Word w = cycle_word(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(odca::eval(m, w));
}
BENCHMARK(BM_eval)->Arg(16)->Arg(64)->Arg(256);

void BM_unfold(benchmark::State& state) {
  const odca::WeightedOdca m = odca::random_odca(4, 3, 2, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(odca::unfold(m, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_unfold)->Arg(16)->Arg(64)->Arg(256);

void BM_equiv_self(benchmark::State& state) {
  const odca::WeightedOdca m = odca::random_odca(3, 3, 2, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(odca::odca_equiv(m, m, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_equiv_self)->Arg(8)->Arg(16)->Arg(32);

void BM_coverability(benchmark::State& state) {
  const odca::WeightedOdca m = odca::random_odca(3, 3, 2, 13);
  const odca::VectorSpace v(m.fsm_size);
  const std::vector<std::size_t> targets{0, 1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(odca::covs_cover(m, odca::initial_config(m), v, targets));
  }
}
BENCHMARK(BM_coverability);

void BM_regularity(benchmark::State& state) {
  const odca::WeightedOdca m = odca::random_odca(2, 2, 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(odca::is_regular(m));
}
BENCHMARK(BM_regularity);

}  // namespace

BENCHMARK_MAIN();
