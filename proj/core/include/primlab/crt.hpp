#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primlab/bigint.hpp"

namespace primlab {

struct Congruence {
    BigInt residue;
    BigInt modulus;
};

/// Least nonnegative x with x = r_i (mod m_i) for every congruence.
/// Moduli must be pairwise coprime and each residue in [0, modulus);
/// violations throw UsageError. The empty system yields 0 (mod 1).
BigInt crt_solve(const std::vector<Congruence>& congruences);

/// Extended gcd over int64: returns (g, s, t) with s*a + t*b = g >= 0.
struct ExtGcd {
    std::int64_t g;
    std::int64_t s;
    std::int64_t t;
};
ExtGcd ext_gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace primlab
