#include <benchmark/benchmark.h>

#include <primlab/diffsets.hpp>
#include <primlab/residue.hpp>

namespace {

void BM_delta_autocorr(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto v = primlab::coprime_set_recursive(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            primlab::delta_mod_autocorr(v.members(), v.modulus()).count());
}

void BM_delta_pairwise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto v = primlab::coprime_set_recursive(n);
    const auto members = v.to_vector();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            primlab::delta_mod_pairwise(members, v.modulus()).count());
}

void BM_decomposition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::delta_decomposition_check(n, 1).ok);
}

}  // namespace

BENCHMARK(BM_delta_autocorr)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_delta_pairwise)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decomposition)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
