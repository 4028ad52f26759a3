#include <benchmark/benchmark.h>

#include "spackd/catalog.hpp"

namespace {

void BM_CatalogColoring(benchmark::State& state, const char* seq_text) {
  const auto seq = spackd::PackingSequence::parse(seq_text);
  const auto t = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::catalog_coloring(seq, 3, t));
  }
}
BENCHMARK_CAPTURE(BM_CatalogColoring, one_one_two, "1,1,2^inf")->Arg(10)->Arg(1000);
BENCHMARK_CAPTURE(BM_CatalogColoring, two, "2^inf")->Arg(10)->Arg(1000);

void BM_Chi(benchmark::State& state) {
  const auto seq = spackd::PackingSequence::parse("1,2^inf");
  for (auto _ : state) {
    for (std::int64_t t = 4; t < 200; ++t) {
      benchmark::DoNotOptimize(spackd::chi_reduced(seq, 3, t));
    }
  }
}
BENCHMARK(BM_Chi);

}  // namespace
