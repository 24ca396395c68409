#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "morsenov/braid.hpp"
#include "morsenov/murasugi.hpp"
#include "morsenov/surface.hpp"

namespace {

using morsenov::Braidword;

// Strict words: every generator index in 1..strands-1 occurs.
Braidword random_strict(int strands, int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w;
  for (int i = 1; i < strands; ++i) w.push_back(sign(rng) ? i : -i);
  while (static_cast<int>(w.size()) < length) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  std::shuffle(w.begin(), w.end(), rng);
  return Braidword::from_signed(strands, w);
}

void BM_Inhomogeneity(benchmark::State& state) {
  const auto w = random_strict(8, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::inhomogeneity(w));
}
BENCHMARK(BM_Inhomogeneity)->Arg(16)->Arg(256)->Arg(4096);

void BM_Minimize(benchmark::State& state) {
  const auto w = random_strict(4, 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::minimize_inhomogeneity(w, state.range(0)));
}
BENCHMARK(BM_Minimize)->Arg(100)->Arg(1000);

void BM_SeifertMatrix(benchmark::State& state) {
  const auto w = random_strict(6, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::seifert_matrix_from_braid(w));
}
BENCHMARK(BM_SeifertMatrix)->Arg(8)->Arg(32);

void BM_AlexanderSeifert(benchmark::State& state) {
  const auto v = morsenov::seifert_matrix_from_braid(random_strict(4, static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::alexander_from_seifert(v.entries));
}
BENCHMARK(BM_AlexanderSeifert)->Arg(6)->Arg(12);

void BM_AlexanderBurau(benchmark::State& state) {
  const auto w = random_strict(4, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::alexander_via_burau(w));
}
BENCHMARK(BM_AlexanderBurau)->Arg(6)->Arg(12);

void BM_TwistKnot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(morsenov::twist_knot(static_cast<int>(state.range(0)), -1));
}
BENCHMARK(BM_TwistKnot)->Arg(1)->Arg(5);

}  // namespace
