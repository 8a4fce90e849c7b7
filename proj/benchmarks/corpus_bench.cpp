#include <benchmark/benchmark.h>

#include <lowdup/runner.hpp>

#include <random>

#include "builders.hpp"
#include "corpus_gen.hpp"

namespace {

// All-pairs comparison over generated submissions of up to 50 methods.
void BM_Corpus(benchmark::State& state) {
  build::TempDir dir;
  std::mt19937 rng(24);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (std::size_t k = 0; k < count; ++k) {
    dir.write("sub" + std::to_string(100 + k) + "/prog.json", gen::random_fixture(rng, 30 + rng() % 21));
  }
  lowdup::RunConfig config;
  config.mode = static_cast<lowdup::Mode>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lowdup::run_corpus(config, dir.path()));
  state.counters["pairs"] = static_cast<double>(count * (count - 1) / 2);
}
BENCHMARK(BM_Corpus)
    ->ArgsProduct({{8, 24}, {static_cast<long>(lowdup::Mode::LA), static_cast<long>(lowdup::Mode::LA_M)}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
