#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "primlab/primes.hpp"

namespace primlab {

struct GapPair {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t gap = 0;
    bool consecutive = false;  // no prime strictly between the two
    std::uint8_t lower_mod6 = 0;
    std::uint8_t upper_mod6 = 0;
};

enum class WitnessMode { Sum, Difference };

struct GoldbachWitness {
    std::uint64_t even_target = 0;
    std::uint64_t p = 0;  // minimal prime component
    std::uint64_t q = 0;  // p + q = target (sum) or q - p = target (difference)
    WitnessMode mode = WitnessMode::Sum;
};

/// Re-validates a witness with the deterministic primality test and the
/// arithmetic identity. Shares no code with the sieve-based scanners.
bool revalidate_witness(const GoldbachWitness& w);

struct GoldbachScanResult {
    std::uint64_t limit = 0;
    std::uint64_t evens_scanned = 0;
    std::vector<std::uint64_t> failures;       // evens with no decomposition (expected empty)
    std::vector<GoldbachWitness> sample;       // minimal-p witnesses for the smallest evens
    GoldbachWitness hardest;                   // witness with the largest minimal p
    std::uint64_t revalidated = 0;             // witnesses passed through the checker
    std::vector<std::uint64_t> revalidation_failures;
    std::uint64_t histogram_limit = 0;
    std::map<std::uint64_t, std::uint64_t> representation_histogram;  // reps -> #evens
};

struct GoldbachScanOptions {
    unsigned jobs = 1;
    std::uint64_t sample_count = 64;
    // Pushes every minimal witness through revalidate_witness as it is
    // found (the sieve scanner and the checker share no code).
    bool revalidate_all = false;
    // r(e) is tallied only up to this bound; the full histogram at 10^6
    // costs ~3e9 pair visits, far beyond the scan budget.
    std::uint64_t histogram_limit = 100'000;
};

/// Minimal-p Goldbach witnesses for every even in [4, limit]. Segments of
/// the range are scanned concurrently over one shared sieve and merged in
/// order, so results are identical for any job count.
GoldbachScanResult goldbach_scan(std::uint64_t limit, const GoldbachScanOptions& opts = {});

struct DifferenceScanResult {
    std::uint64_t limit = 0;
    std::uint64_t search_bound = 0;
    std::vector<GoldbachWitness> witnesses;
    std::vector<std::uint64_t> unresolved;  // no witness below the bound; not a refutation
};

/// For each even e <= limit, the least prime p <= search_bound with p + e
/// also prime.
DifferenceScanResult prime_difference_scan(std::uint64_t limit, std::uint64_t search_bound);

/// All prime pairs (p, p + gap) with lower member p <= limit, flagged for
/// consecutiveness and annotated with residues mod 6.
std::vector<GapPair> gap_pairs(std::uint64_t limit, std::uint64_t gap);

/// Twin-pair count with lower member <= limit by an enumeration that
/// shares nothing with gap_pairs: 6k+-1 candidates checked by the
/// deterministic primality test.
std::uint64_t twin_count_independent(std::uint64_t limit);

/// Twin candidates (x, x+2) inside [p_{n+1}, p_{n+1}^2) of the periodic
/// coprime extension of V mod primorial(n). Every returned pair is
/// asserted prime (the window corollary); a composite throws.
std::vector<GapPair> twin_in_coprime_window(std::size_t n);

struct GapEquationSolution {
    std::size_t n = 0;
    std::int64_t gap = 0;
    std::int64_t particular_l = 0;   // extended-gcd particular solution
    std::int64_t particular_cp = 0;
    std::int64_t delta_l = 0;        // normalized
    std::int64_t delta_cp = 0;       // normalized: even, in [0, primorial(n) - 2]
    bool normalized = true;
    bool identity_ok = false;        // primorial(n)*delta_l + p_{n+1}*delta_cp == gap
    bool delta_l_in_bound = false;   // delta_l in [2 - p_{n+1}, p_{n+1} - 2]
    std::vector<std::int64_t> mixed_radix_digits;  // successive primorial divisions of |particular_cp|
    std::int64_t mixed_radix_remainder = 0;
};

/// Solves primorial(n) * dl + p_{n+1} * dcp = gap and normalizes dcp into
/// the even range [0, primorial(n) - 2]. The delta_l bound is reported,
/// not enforced; it fails already at n = 3, gap = 2.
GapEquationSolution gap_equation_solve(std::size_t n, std::int64_t gap);

struct KWindowChoice {
    std::size_t k = 0;
    std::uint64_t window_primorial = 0;  // primorial(n - k + 1)
    std::uint64_t window_end = 0;        // 2 * window_primorial
    std::uint64_t coprime_count = 0;
    bool audit_ok = false;               // every coprime in [2, window_end) is prime
    std::vector<std::uint64_t> audit_failures;
};

struct KWindowReport {
    std::size_t n = 0;
    std::uint64_t p_next = 0;  // p_{n+1}
    double asymptotic_k = 0;   // n - 3 ln(n) / (2 ln ln n)
    std::vector<KWindowChoice> feasible;  // k with p_{n+1} <= 2*primorial(n-k+1) <= p_{n+1}^2
};

/// Sandwich search p_{n+1} <= 2 * primorial(n-k+1) <= p_{n+1}^2 plus the
/// primality audit of each feasible window.
KWindowReport goldbach_k_window(std::size_t n);

}  // namespace primlab
