#pragma once

#include <cstdint>
#include <vector>

#include "primlab/bigint.hpp"

namespace primlab {

/// Sets larger than this many bits are never materialized (default cap);
/// 10^7 covers every basis up to n = 8 (primorial 9,699,690) at < 2 MB.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// The ordered first-n primes and their primorial. Indexing is over true
// primes throughout: primes[0] = p_1 = 2. Immutable once built.
class PrimeBasis {
public:
    /// Basis of the first n primes; n = 0 gives the empty basis (primorial 1).
    static PrimeBasis first(std::size_t n);

    std::size_t n() const { return primes_.size(); }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    /// p_i with 1-based i (p_1 = 2). i must be in [1, n].
    std::uint64_t prime(std::size_t i) const;

    const BigInt& primorial() const { return primorial_; }

    /// Primorial as uint64_t when it fits a materialization context,
    /// checked against cap. Throws CapExceededError otherwise.
    std::uint64_t primorial_u64_checked(std::uint64_t cap, const char* what) const;

    /// Re-multiplies the prime list and compares with the stored product.
    bool verify_product() const;

private:
    explicit PrimeBasis(std::vector<std::uint64_t> primes);

    std::vector<std::uint64_t> primes_;
    BigInt primorial_;
};

/// Product of the first n primes, exact at any width. primorial(0) = 1.
BigInt primorial(std::size_t n);

/// Product of primes p_lo..p_hi (1-based inclusive prime indices).
BigInt prime_run_product(std::size_t lo, std::size_t hi);

}  // namespace primlab
