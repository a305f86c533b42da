#include "primlab/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace primlab {

std::uint64_t binary_gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = std::countr_zero(a | b);
    a >>= std::countr_zero(a);
    while (b != 0) {
        b >>= std::countr_zero(b);
        if (a > b) std::swap(a, b);
        b -= a;
    }
    return a << shift;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    // n odd, n > 2, a reduced and nonzero.
    std::uint64_t d = n - 1;
    int r = std::countr_zero(d);
    d >>= r;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Witness set covering all 64-bit composites.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (!strong_probable_prime(n, a % n)) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<std::uint8_t> composite(limit + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

std::vector<std::uint64_t> first_n_primes(std::size_t n) {
    if (n == 0) return {};
    // p_n < n (ln n + ln ln n) for n >= 6; the +16 floor covers tiny n.
    double nn = static_cast<double>(std::max<std::size_t>(n, 6));
    auto bound = static_cast<std::uint64_t>(nn * (std::log(nn) + std::log(std::log(nn)))) + 16;
    for (;;) {
        auto primes = primes_upto(bound);
        if (primes.size() >= n) {
            primes.resize(n);
            return primes;
        }
        bound *= 2;
    }
}

std::uint64_t prime_pi(std::uint64_t x) {
    if (x < 2) return 0;
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))) + 1;
    const auto base = primes_upto(root);
    std::uint64_t count = 0;
    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<std::uint8_t> seg(kSegment);
    for (std::uint64_t lo = 2; lo <= x; lo += kSegment) {
        const std::uint64_t hi = std::min(x, lo + kSegment - 1);
        std::fill(seg.begin(), seg.begin() + (hi - lo + 1), 0);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 1;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (!seg[i - lo]) ++count;
    }
    return count;
}

}  // namespace primlab
