#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace primlab {

// Exact arbitrary-precision integer. Primorials outgrow 64 bits at n = 16,
// so everything that carries a primorial (or a CRT modulus product) uses
// BigInt; set members and materialized moduli stay uint64_t because they
// are capped well below 2^64.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::optional<std::uint64_t> to_u64(const BigInt& v) {
    if (v < 0 || !v.fits_ulong_p()) return std::nullopt;
    return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace primlab
