#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tensorcomm/commutation.hpp"

namespace {

std::vector<tcm::ComplexScalar> random_state(std::size_t dim) {
  std::mt19937 rng(dim * 2654435761u);
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  std::vector<tcm::ComplexScalar> v(dim);
  for (auto& z : v) z = tcm::ComplexScalar(reals(rng), reals(rng));
  return v;
}

void BM_DenseApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const tcm::ComplexDense u = tcm::tcm_by_rule(n, p).to_dense();
  const auto v = random_state(static_cast<std::size_t>(n) * p);
  for (auto _ : state) {
    auto out = tcm::matvec(u, v);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_MatrixFreeApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const auto v = random_state(static_cast<std::size_t>(n) * p);
  for (auto _ : state) {
    auto out = tcm::apply_swap(n, p, v);
    benchmark::DoNotOptimize(out.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_Materialize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto u = tcm::tcm_by_rule(n, p).to_dense();
    benchmark::DoNotOptimize(u.entries().data());
  }
}

}  // namespace

BENCHMARK(BM_DenseApply)->Args({4, 4})->Args({8, 8})->Args({16, 16})->Args({32, 32})->Args({64, 64});
BENCHMARK(BM_MatrixFreeApply)
    ->Args({4, 4})
    ->Args({8, 8})
    ->Args({16, 16})
    ->Args({32, 32})
    ->Args({64, 64})
    ->Args({128, 128});
BENCHMARK(BM_Materialize)->Args({8, 8})->Args({32, 32});

BENCHMARK_MAIN();
