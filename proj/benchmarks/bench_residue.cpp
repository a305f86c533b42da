#include <benchmark/benchmark.h>

#include <primlab/residue.hpp>

namespace {

void BM_coprime_set_sieve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::coprime_set_sieve(n).cardinality());
}

void BM_coprime_set_recursive(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::coprime_set_recursive(n).cardinality());
}

void BM_prime_window(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::prime_window(n).size());
}

}  // namespace

BENCHMARK(BM_coprime_set_sieve)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coprime_set_recursive)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prime_window)->DenseRange(4, 8);

BENCHMARK_MAIN();
