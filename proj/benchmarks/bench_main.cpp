#include "twklv/bar.hpp"
#include "twklv/datum.hpp"
#include "twklv/fq.hpp"
#include "twklv/hecke.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace twklv;

void BM_FoldedSystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_folded("D4", "(3 4)"));
}
BENCHMARK(BM_FoldedSystem);

void BM_HeckeKL_A3(benchmark::State& state) {
  auto fs = make_folded("A3", "()");
  for (auto _ : state) benchmark::DoNotOptimize(hecke_kl(fs));
}
BENCHMARK(BM_HeckeKL_A3);

void BM_HeckeKL_B3(benchmark::State& state) {
  auto fs = make_folded("B3", "()");
  for (auto _ : state) benchmark::DoNotOptimize(hecke_kl(fs));
}
BENCHMARK(BM_HeckeKL_B3)->Unit(benchmark::kMillisecond);

void BM_BarMatrix(benchmark::State& state) {
  const ParamDatum d = hecke_case_datum(*make_folded("A4", "(1 4)(2 3)"));
  for (auto _ : state) benchmark::DoNotOptimize(bar_matrix(d));
}
BENCHMARK(BM_BarMatrix)->Unit(benchmark::kMillisecond);

void BM_BarMatrixOracle(benchmark::State& state) {
  const ParamDatum d = builtin_datum("a1a1-sc");
  for (auto _ : state) benchmark::DoNotOptimize(bar_matrix_oracle(d));
}
BENCHMARK(BM_BarMatrixOracle)->Unit(benchmark::kMillisecond);

void BM_FqScene_A2S(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_scene(Family::A2S, q));
}
BENCHMARK(BM_FqScene_A2S)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Interpolate_A2C(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_datum(Family::A2C, {3, 5, 7, 9}));
}
BENCHMARK(BM_Interpolate_A2C)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
