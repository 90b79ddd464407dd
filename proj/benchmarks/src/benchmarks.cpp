#include <benchmark/benchmark.h>

#include <cstddef>

#include "fuzzy/aggregation.hpp"
#include "fuzzy/estimation.hpp"
#include "fuzzy/simulation.hpp"
#include "fuzzy/tnorm.hpp"

namespace {

using fuzzy::AlphaGrid;
using fuzzy::AlphaProfile;
using fuzzy::TNorm;

AlphaGrid grid_of(const benchmark::State& state) {
  return AlphaGrid::uniform(static_cast<std::size_t>(state.range(0)));
}

void BM_NfkBinaryPlus(benchmark::State& state) {
  const AlphaGrid g = grid_of(state);
  const AlphaProfile a = AlphaProfile::triangular(-1, 0, 1, g);
  const AlphaProfile b = AlphaProfile::trapezoidal(-2, -0.5, 0.5, 1, g);
  const auto op = fuzzy::MonotoneBinaryOp::plus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy::nfk_binary(op, a, b, TNorm::product()));
  }
}
BENCHMARK(BM_NfkBinaryPlus)->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond);

void BM_MedianPower(benchmark::State& state) {
  const AlphaProfile a = AlphaProfile::triangular(-1, 0, 1, grid_of(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy::median_power(a, 99, TNorm::product()));
  }
}
BENCHMARK(BM_MedianPower)->Arg(1001)->Arg(10001);

void BM_AveragePowerEnvelope(benchmark::State& state) {
  const AlphaGrid g = grid_of(state);
  const AlphaProfile a = AlphaProfile::from_slopes(
      g, [](double al) { return al * al - 1; }, [](double al) { return 1 - al; });
  const auto& gen = TNorm::product().generator();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fuzzy::average_power(a, 10, gen, fuzzy::ConcavityPolicy::envelope_bound));
  }
}
BENCHMARK(BM_AveragePowerEnvelope)->Arg(1001)->Arg(10001);

void BM_EstimateProfile(benchmark::State& state) {
  const fuzzy::FuzzyNumber truth(AlphaProfile::triangular(-1, 0, 1));
  const auto sample = fuzzy::draw_realizations(
      {.truth = truth, .count = static_cast<std::size_t>(state.range(0)), .seed = 1});
  const fuzzy::EstimatorConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy::estimate_profile(sample, cfg));
  }
}
BENCHMARK(BM_EstimateProfile)->Arg(100)->Arg(10000);

void BM_DrawRealizations(benchmark::State& state) {
  const fuzzy::FuzzyNumber truth(AlphaProfile::triangular(-1, 0, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzy::draw_realizations(
        {.truth = truth, .count = static_cast<std::size_t>(state.range(0)), .seed = 1}));
  }
}
BENCHMARK(BM_DrawRealizations)->Arg(10000);

void BM_PseudoInverseCustom(benchmark::State& state) {
  // A generator without a closed-form inverse goes through bisection.
  const fuzzy::Generator g = fuzzy::Generator::custom(
      [](double x) { return (1 - x) * (1 - x) * (2 - x); }, false);
  double y = 0.0;
  for (auto _ : state) {
    y = y > 1.9 ? 0.0 : y + 0.01;
    benchmark::DoNotOptimize(fuzzy::pseudo_inverse_eval(g, y));
  }
}
BENCHMARK(BM_PseudoInverseCustom);

}  // namespace

BENCHMARK_MAIN();
