#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primlab/bigint.hpp"
#include "primlab/primes.hpp"

namespace primlab {

// A set Q of distinct primes with its exact product and the y floor used
// by the estimate bookkeeping (every prime in Q exceeds y).
class PrimeSetQ {
public:
    /// Validates that entries are prime, strictly increasing after
    /// sorting, and that y_floor < min(Q). Empty Q is allowed.
    static PrimeSetQ make(std::vector<std::uint64_t> primes, double y_floor = 1.0);

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    const BigInt& product() const { return product_; }
    double y_floor() const { return y_floor_; }

private:
    std::vector<std::uint64_t> primes_;
    BigInt product_;
    double y_floor_ = 1.0;
};

/// Psi(x, Q): integers in [1, x] with no prime divisor in Q.

/// Alternating floor sum over squarefree subset products; subsets whose
/// product exceeds x are pruned (they contribute nothing).
std::uint64_t psi_inclusion_exclusion(std::uint64_t x, const PrimeSetQ& q);

/// Legendre-style peeling: Psi(x, Q_m) = Psi(x, Q_{m-1}) -
/// Psi(floor(x / q_m), Q_{m-1}), memoized per call on (value, index)
/// with LRU eviction at 10^6 entries.
std::uint64_t psi_recursive(std::uint64_t x, const PrimeSetQ& q);

/// Direct scan: marks multiples of each prime in Q. The ground truth the
/// other two engines are checked against.
std::uint64_t psi_brute(std::uint64_t x, const PrimeSetQ& q);

/// Count of integers in [1, x] coprime to the first n primes. Runs the
/// inclusion-exclusion engine, and for x <= 10^6 cross-checks it against
/// the direct scan; disagreement throws IdentityViolationError.
std::uint64_t coprime_pi(std::uint64_t x, std::size_t n);

struct ShiftReflectVerdict {
    bool checked_translation = false;
    bool translation_ok = false;
    bool checked_reflection = false;  // false when preconditions fail: skipped, not failed
    bool reflection_ok = false;
    std::uint64_t psi_x = 0;
    std::uint64_t psi_reflected = 0;
    std::uint64_t psi_full_period = 0;
};

/// Verifies the translation identity Psi(x) = #{i in (y + k*P, x + k*P] :
/// gcd(i, P) = 1} + floor(y) and, when x < P_Q with gcd(x, P_Q) = 1, the
/// reflection identity Psi(x) + Psi(P_Q - x) = Psi(P_Q) + 1 with
/// Psi(P_Q) = prod(q_i - 1).
ShiftReflectVerdict psi_shift_reflect_check(std::uint64_t x, const PrimeSetQ& q,
                                            std::uint64_t k);

struct PsiEstimates {
    std::uint64_t exact = 0;
    std::string engine;            // inclusion-exclusion | brute
    double product_estimate = 0;   // (x - y) * prod(1 - 1/p) + y
    double product_rel_error = 0;
    double mertens_estimate = 0;   // (x - y) * ln(y)/ln(x) + y
    double mertens_rel_error = 0;
};

/// Exact count plus both closed-form estimates and their measured
/// relative errors. Nothing is asserted here; errors are measurements.
PsiEstimates psi_estimate(std::uint64_t x, double y, const PrimeSetQ& q);

/// prod(1 - 1/p) over primes y < p <= x, by direct sieve enumeration.
long double mertens_product(std::uint64_t y, std::uint64_t x);

struct ErrorProfileRow {
    std::size_t m = 0;
    std::uint64_t last_prime = 0;  // p_{n+m-1}
    std::uint64_t exact = 0;
    double expected = 0;   // x * prod(1 - 1/p_i), i = n .. n+m-1
    double abs_error = 0;  // |exact - expected|
    double f_value = 0;    // x / (ln x * ln(n + m))
    double ratio = 0;      // abs_error / f_value
};

/// Error table for Q_m = {p_n, ..., p_{n+m-1}}, m = 1..m_max. The m = 1
/// row's error is the fractional part of x / p_n, hence <= 1.
std::vector<ErrorProfileRow> appendix_error_profile(std::uint64_t x, std::size_t n,
                                                    std::size_t m_max);

}  // namespace primlab
