#include <benchmark/benchmark.h>

#include "spackd/search.hpp"

namespace {

using spackd::DistanceGraphSpec;
using spackd::PackingSequence;

// Refutes chi - 1 colors on a window of 2(k + t) integers.
void BM_SearchUnsat(benchmark::State& state, const char* seq_text, int colors) {
  const PackingSequence seq = PackingSequence::parse(seq_text);
  const auto k = state.range(0);
  const auto t = state.range(1);
  const DistanceGraphSpec spec(k, t);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto outcome = spackd::search_window(seq, spec, colors, 2 * (k + t));
    nodes = outcome.nodes;
    benchmark::DoNotOptimize(outcome.status);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

BENCHMARK_CAPTURE(BM_SearchUnsat, one_one_two, "1,1,2^inf", 3)->Args({3, 4})->Args({5, 7});
BENCHMARK_CAPTURE(BM_SearchUnsat, one_two, "1,2^inf", 4)->Args({3, 5})->Args({5, 9});
BENCHMARK_CAPTURE(BM_SearchUnsat, two, "2^inf", 4)->Args({3, 5})->Args({7, 9});

void BM_SearchSat(benchmark::State& state) {
  const PackingSequence seq = PackingSequence::parse("2^inf");
  const DistanceGraphSpec spec(3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::search_window(seq, spec, 5, state.range(0)).status);
  }
}
BENCHMARK(BM_SearchSat)->Arg(64)->Arg(256);

void BM_EnumerateTorus(benchmark::State& state) {
  const PackingSequence seq = PackingSequence::parse("2^inf");
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::enumerate_torus(seq, 5, 5, 5));
  }
}
BENCHMARK(BM_EnumerateTorus);

}  // namespace
