// Numerator cost on consecutive-k-out-of-n ideals, before and after
// collapsing the support poset to its least path partition.  Fresh memo
// table per iteration so the timings measure the computation, not the cache.
#include <benchmark/benchmark.h>

#include "depolar/depolarization.hpp"
#include "depolar/hilbert.hpp"
#include "depolar/reliability.hpp"
#include "depolar/support_poset.hpp"

using namespace depolar;

static void BM_numerator_original(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  MonomialIdeal ideal = rel::consecutive_k_out_of_n_ideal(k, n);
  for (auto _ : state) {
    HilbertCache cache;
    benchmark::DoNotOptimize(hilbert_numerator(ideal, cache));
  }
}

static void BM_numerator_collapsed(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  MonomialIdeal ideal = rel::consecutive_k_out_of_n_ideal(k, n);
  DepolarizationRecord record =
      depolarize(ideal, min_path_partition(ordered_support_poset(ideal)));
  for (auto _ : state) {
    HilbertCache cache;
    benchmark::DoNotOptimize(hilbert_numerator(record.ideal, cache));
  }
}

static void shapes(benchmark::internal::Benchmark* b) {
  b->Args({10, 3})->Args({20, 6})->Args({40, 12})->Args({100, 30});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_numerator_original)->Apply(shapes);
BENCHMARK(BM_numerator_collapsed)->Apply(shapes);

BENCHMARK_MAIN();
