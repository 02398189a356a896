// Serial reference kernels against their OpenMP counterparts.
#include "rost/catalog.hpp"
#include "rost/kunneth.hpp"
#include "rost/omega_model.hpp"

#include <benchmark/benchmark.h>

namespace {

rost::GradedFPModule tensor_module(unsigned long p, int s) {
  std::vector<rost::FactorClasses> f(static_cast<std::size_t>(s), rost::rost_factor(p, 3, 1));
  return rost::kunneth_quotient(f, 1).quotient->module();
}

void BM_normalize(benchmark::State& state) {
  const auto m = tensor_module(static_cast<unsigned long>(state.range(0)), static_cast<int>(state.range(1)));
  const auto policy = state.range(2) ? rost::ExecPolicy::parallel : rost::ExecPolicy::serial;
  for (auto _ : state) benchmark::DoNotOptimize(rost::normalize(m, policy));
}
BENCHMARK(BM_normalize)->Args({2, 3, 0})->Args({2, 3, 1})->Args({3, 2, 0})->Args({3, 2, 1})->Unit(benchmark::kMillisecond);

void BM_chow_collapse(benchmark::State& state) {
  const rost::OmegaImageModel model(static_cast<unsigned long>(state.range(0)), {2, 2});
  const auto policy = state.range(1) ? rost::ExecPolicy::parallel : rost::ExecPolicy::serial;
  for (auto _ : state) benchmark::DoNotOptimize(rost::chow_collapse(model, policy));
}
BENCHMARK(BM_chow_collapse)->Args({3, 0})->Args({3, 1})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
