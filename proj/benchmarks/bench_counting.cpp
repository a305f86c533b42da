#include <benchmark/benchmark.h>

#include <primlab/conjectures.hpp>
#include <primlab/counting.hpp>

namespace {

const primlab::PrimeSetQ& ten_primes() {
    static const auto q =
        primlab::PrimeSetQ::make({3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
    return q;
}

void BM_psi_inclusion_exclusion(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::psi_inclusion_exclusion(x, ten_primes()));
}

void BM_psi_recursive(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::psi_recursive(x, ten_primes()));
}

void BM_psi_brute(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::psi_brute(x, ten_primes()));
}

void BM_prime_pi(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(primlab::prime_pi(x));
}

void BM_goldbach_scan(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    primlab::GoldbachScanOptions opts;
    opts.jobs = 2;
    opts.histogram_limit = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(primlab::goldbach_scan(limit, opts).failures.size());
}

}  // namespace

BENCHMARK(BM_psi_inclusion_exclusion)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_psi_recursive)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_psi_brute)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_prime_pi)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_goldbach_scan)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
