#include <benchmark/benchmark.h>

#include "cyclonorm/domino.hpp"
#include "cyclonorm/norms.hpp"
#include "cyclonorm/polyring.hpp"
#include "cyclonorm/quadfield.hpp"
#include "cyclonorm/sequences.hpp"

namespace {

using namespace cyclonorm;

void BM_Cyclotomic(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(n));
}
BENCHMARK(BM_Cyclotomic)->Arg(105)->Arg(1155)->Arg(9699);

void BM_ResultantPrs(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const IntPoly phi = cyclotomic(p);
  const IntPoly r{1, -1, -1};
  for (auto _ : state) benchmark::DoNotOptimize(resultant_prs(phi, r));
}
BENCHMARK(BM_ResultantPrs)->Arg(31)->Arg(127)->Arg(499);

void BM_NormPrimitive(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const IntPoly r{1, -1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(norm_primitive(r, n));
}
BENCHMARK(BM_NormPrimitive)->Arg(997)->Arg(5005)->Arg(9991);

void BM_Lucas(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lucas(m));
}
BENCHMARK(BM_Lucas)->Arg(1000)->Arg(100000);

void BM_DominoTable(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(domino_table(n));
}
BENCHMARK(BM_DominoTable)->Arg(17)->Arg(1001)->Arg(9997);

void BM_SignedSum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signed_sum(n));
}
BENCHMARK(BM_SignedSum)->Arg(1001)->Arg(9997);

void BM_GaussPeriodRelnorm(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_period_relnorm(p, 1));
}
BENCHMARK(BM_GaussPeriodRelnorm)->Arg(199)->Arg(229);

}  // namespace

BENCHMARK_MAIN();
