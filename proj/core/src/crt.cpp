#include "primlab/crt.hpp"

#include "primlab/errors.hpp"

namespace primlab {

ExtGcd ext_gcd_i64(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

BigInt crt_solve(const std::vector<Congruence>& congruences) {
    BigInt x = 0, m = 1;
    for (const auto& c : congruences) {
        if (c.modulus < 1) throw UsageError("crt_solve: modulus must be >= 1");
        if (c.residue < 0 || c.residue >= c.modulus)
            throw UsageError("crt_solve: residue out of [0, modulus)");
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(),
                   c.modulus.get_mpz_t());
        if (g != 1)
            throw UsageError("crt_solve: moduli share factor " + g.get_str());
        // x' = x + m * s * (r - x), valid because s*m = 1 (mod c.modulus).
        const BigInt combined = m * c.modulus;
        BigInt next = x + m * (s * (c.residue - x) % c.modulus);
        next %= combined;
        if (next < 0) next += combined;
        x = next;
        m = combined;
    }
    return x;
}

}  // namespace primlab
