#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "cyclia/constructions.hpp"
#include "cyclia/fourier.hpp"
#include "cyclia/herglotz.hpp"
#include "cyclia/moduli.hpp"

namespace {

using namespace cyclia;

const CircleMeasure& kahane(int depth) {
  static std::vector<std::unique_ptr<CircleMeasure>> cache(23);
  auto& slot = cache[static_cast<std::size_t>(depth)];
  if (!slot) slot = std::make_unique<CircleMeasure>(kahane_smooth(SmoothnessProfile::log_power(1.0, 0.5), depth, 0));
  return *slot;
}

void BM_RingFast(benchmark::State& state) {
  const HerglotzEvaluator h(kahane(16));
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h.ring(0.999, samples, 0.0, true));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_RingFast)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_RingDirect(benchmark::State& state) {
  SalemSpec spec;
  spec.generations = static_cast<int>(state.range(0));
  const HerglotzEvaluator h(salem_measure(spec).measure);
  for (auto _ : state) benchmark::DoNotOptimize(h.ring(0.999, 1024, 0.0, true));
}
BENCHMARK(BM_RingDirect)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ModulusSmoothness(benchmark::State& state) {
  const CircleMeasure& mu = kahane(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(modulus_smoothness(mu, 1.0 / 64));
}
BENCHMARK(BM_ModulusSmoothness)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FourierCoefficients(benchmark::State& state) {
  const CircleMeasure& mu = kahane(16);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_coefficients(mu, state.range(0)));
}
BENCHMARK(BM_FourierCoefficients)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);

void BM_MartingaleSquareFunction(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const DyadicMartingale m = martingale_from_measure(kahane(depth), depth);
  for (auto _ : state) benchmark::DoNotOptimize(max_square(m, depth));
}
BENCHMARK(BM_MartingaleSquareFunction)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
