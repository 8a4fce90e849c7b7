#include <benchmark/benchmark.h>

#include <lowdup/rkgst.hpp>

#include <random>
#include <vector>

namespace {

std::vector<std::uint32_t> random_symbols(std::mt19937& rng, std::size_t n, std::uint32_t alphabet) {
  std::vector<std::uint32_t> out(n);
  for (auto& x : out) x = rng() % alphabet;
  return out;
}

// Unrelated sequences over a family-sized alphabet.
void BM_RkgstRandom(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_symbols(rng, n, 21);
  const auto b = random_symbols(rng, n, 21);
  for (auto _ : state) benchmark::DoNotOptimize(lowdup::rkgst(a, b, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RkgstRandom)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

// b is a with a few blocks shuffled: long tiles, the plagiarism case.
void BM_RkgstShuffledCopy(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_symbols(rng, n, 21);
  auto b = a;
  const std::size_t block = std::max<std::size_t>(n / 8, 1);
  for (std::size_t k = 0; k + 2 * block <= n; k += 2 * block) {
    std::swap_ranges(b.begin() + static_cast<std::ptrdiff_t>(k), b.begin() + static_cast<std::ptrdiff_t>(k + block),
                     b.begin() + static_cast<std::ptrdiff_t>(k + block));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lowdup::rkgst(a, b, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RkgstShuffledCopy)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_RkgstTiny(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto a = random_symbols(rng, 8, 3);
  const auto b = random_symbols(rng, 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lowdup::rkgst(a, b, 2));
}
BENCHMARK(BM_RkgstTiny);

}  // namespace
