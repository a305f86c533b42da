#include <doctest.h>

#include <random>

#include <primlab/basis.hpp>
#include <primlab/errors.hpp>
#include <primlab/primes.hpp>

using namespace primlab;

TEST_CASE("binary gcd against the Euclidean definition") {
    auto euclid = [](std::uint64_t a, std::uint64_t b) {
        while (b) {
            const std::uint64_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng() % 1'000'000, b = rng() % 1'000'000;
        CHECK(binary_gcd(a, b) == euclid(a, b));
    }
    CHECK(binary_gcd(0, 5) == 5);
    CHECK(binary_gcd(5, 0) == 5);
    CHECK(binary_gcd(0, 0) == 0);
}

TEST_CASE("deterministic primality agrees with trial division") {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 3000; ++n) CHECK(is_prime_u64(n) == trial(n));
    // strong-pseudoprime traps for small witness sets
    CHECK(!is_prime_u64(3215031751ULL));  // spsp to bases 2,3,5,7
    CHECK(!is_prime_u64(3825123056546413051ULL));  // spsp to bases 2..23
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
}

TEST_CASE("first_n_primes and primes_upto") {
    CHECK(first_n_primes(0).empty());
    CHECK(first_n_primes(8) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_upto(1).empty());
    CHECK(primes_upto(30).back() == 29);
}

TEST_CASE("prime_pi checkpoints") {
    CHECK(prime_pi(0) == 0);
    CHECK(prime_pi(1) == 0);
    CHECK(prime_pi(2) == 1);
    CHECK(prime_pi(100) == 25);
    CHECK(prime_pi(1000) == 168);
    CHECK(prime_pi(1'000'000) == 78498);
}

TEST_CASE("primorial values") {
    CHECK(primorial(0) == 1);
    CHECK(primorial(3) == 30);
    CHECK(primorial(8) == 9699690);
    // stays exact past 64 bits
    CHECK(primorial(17).get_str() == "1922760350154212639070");
}

TEST_CASE("prime basis invariants") {
    const PrimeBasis basis = PrimeBasis::first(6);
    CHECK(basis.n() == 6);
    CHECK(basis.prime(1) == 2);
    CHECK(basis.prime(6) == 13);
    CHECK(basis.primorial() == 30030);
    CHECK(basis.verify_product());
    for (std::uint64_t p : basis.primes()) CHECK(is_prime_u64(p));
    CHECK_THROWS_AS(basis.prime(7), UsageError);
    CHECK_THROWS_AS(basis.prime(0), UsageError);
}
