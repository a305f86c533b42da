#pragma once

#include <cstdint>
#include <vector>

namespace primlab {

/// Binary gcd. gcd(0, b) = b, gcd(a, 0) = a.
std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic strong-pseudoprime test, valid for every 64-bit input.
/// Uses the fixed witness set {2,3,5,7,11,13,17,19,23,29,31,37}.
bool is_prime_u64(std::uint64_t n);

/// All primes <= limit, ascending. Plain Eratosthenes; fine to ~10^8.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

/// The first n primes, ascending (p_1 = 2).
std::vector<std::uint64_t> first_n_primes(std::size_t n);

/// pi(x): number of primes <= x, by segmented sieve.
std::uint64_t prime_pi(std::uint64_t x);

}  // namespace primlab
