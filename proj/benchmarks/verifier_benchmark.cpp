#include <benchmark/benchmark.h>

#include "spackd/catalog.hpp"
#include "spackd/verifier.hpp"

namespace {

using spackd::PackingSequence;

void BM_VerifySchema(benchmark::State& state) {
  const PackingSequence seq = PackingSequence::parse("2^inf");
  const auto t = state.range(0);
  const auto schema = spackd::catalog_coloring(seq, 3, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::verify_schema(schema, seq));
  }
}
BENCHMARK(BM_VerifySchema)->Arg(8)->Arg(101)->Arg(1001);

void BM_VerifyExplicit(benchmark::State& state) {
  const PackingSequence seq = PackingSequence::parse("1,2^inf");
  const spackd::DistanceGraphSpec spec(5, 9);
  const auto coloring = spackd::coloring_for_range(seq, 5, 9, 0, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::verify_explicit(coloring, spec, seq));
  }
}
BENCHMARK(BM_VerifyExplicit)->Arg(1'000)->Arg(10'000);

void BM_ExactDistance(benchmark::State& state) {
  const spackd::DistanceGraphSpec spec(1'000'003, 2'000'003);
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spackd::exact_distance(0, n, spec));
    n = n * 7 % 1'000'000'007;
  }
}
BENCHMARK(BM_ExactDistance);

}  // namespace
