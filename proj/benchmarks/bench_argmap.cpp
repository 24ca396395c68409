#include <benchmark/benchmark.h>

#include "morsenov/argmap.hpp"

namespace {

using namespace morsenov::argmap;

void BM_RationalCritPoints(benchmark::State& state) {
  const auto r = RationalMap::cayley_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(crit_points_arg_rational(r));
}
BENCHMARK(BM_RationalCritPoints)->Arg(2)->Arg(8);

void BM_MilnorBrieskorn(benchmark::State& state) {
  SolverConfig cfg;
  cfg.seed_count = static_cast<int>(state.range(0));
  cfg.threads = 1;
  const auto f = BivariateMero::brieskorn(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(crit_points_milnor(f, 1.0, cfg));
}
BENCHMARK(BM_MilnorBrieskorn)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_LinkRadius(benchmark::State& state) {
  const auto f = BivariateMero::brieskorn(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_link_radius(f, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LinkRadius)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
