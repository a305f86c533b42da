#include "primlab/conjectures.hpp"

#include <algorithm>
#include <cmath>

#include "primlab/basis.hpp"
#include "primlab/crt.hpp"
#include "primlab/errors.hpp"
#include "primlab/pool.hpp"

namespace primlab {

bool revalidate_witness(const GoldbachWitness& w) {
    if (!is_prime_u64(w.p) || !is_prime_u64(w.q)) return false;
    if (w.mode == WitnessMode::Sum) return w.p + w.q == w.even_target;
    return w.q - w.p == w.even_target && w.q > w.p;
}

namespace {

std::vector<std::uint8_t> composite_table(std::uint64_t limit) {
    std::vector<std::uint8_t> composite(limit + 1, 0);
    if (limit >= 1) { composite[0] = 1; composite[1] = 1; }
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    return composite;
}

}  // namespace

GoldbachScanResult goldbach_scan(std::uint64_t limit, const GoldbachScanOptions& opts) {
    if (limit % 2 != 0) throw UsageError("goldbach_scan: limit must be even");
    if (limit < 4) throw UsageError("goldbach_scan: limit must be >= 4");
    if (limit > 100'000'000ULL) throw UsageError("goldbach_scan: limit above 10^8");

    const auto composite = composite_table(limit);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);

    struct Segment {
        std::vector<std::uint64_t> failures;
        GoldbachWitness hardest;
        std::vector<GoldbachWitness> sample;
        std::uint64_t revalidated = 0;
        std::vector<std::uint64_t> revalidation_failures;
    };

    const std::uint64_t evens = (limit - 4) / 2 + 1;
    const std::uint64_t per_segment = 1 << 14;
    const std::size_t segments = static_cast<std::size_t>((evens + per_segment - 1) / per_segment);

    auto scan_segment = [&](std::size_t seg) {
        Segment out;
        const std::uint64_t first = 4 + 2 * (seg * per_segment);
        const std::uint64_t last = std::min(limit, first + 2 * (per_segment - 1));
        for (std::uint64_t e = first; e <= last; e += 2) {
            bool found = false;
            for (std::uint64_t p : primes) {
                if (p > e / 2) break;
                if (!composite[e - p]) {
                    GoldbachWitness w{e, p, e - p, WitnessMode::Sum};
                    if (p > out.hardest.p) out.hardest = w;
                    if (out.sample.size() < opts.sample_count && seg == 0)
                        out.sample.push_back(w);
                    if (opts.revalidate_all) {
                        ++out.revalidated;
                        if (!revalidate_witness(w)) out.revalidation_failures.push_back(e);
                    }
                    found = true;
                    break;
                }
            }
            if (!found) out.failures.push_back(e);
        }
        return out;
    };

    const auto parts = parallel_indexed<Segment>(opts.jobs, segments, scan_segment);

    GoldbachScanResult result;
    result.limit = limit;
    result.evens_scanned = evens;
    for (const auto& part : parts) {
        result.failures.insert(result.failures.end(), part.failures.begin(), part.failures.end());
        if (part.hardest.p > result.hardest.p) result.hardest = part.hardest;
        if (result.sample.empty()) result.sample = part.sample;
        result.revalidated += part.revalidated;
        result.revalidation_failures.insert(result.revalidation_failures.end(),
                                            part.revalidation_failures.begin(),
                                            part.revalidation_failures.end());
    }

    // Representation counts r(e) over the capped domain, by direct pair
    // accumulation.
    result.histogram_limit = std::min(limit, opts.histogram_limit);
    if (result.histogram_limit >= 4) {
        std::vector<std::uint32_t> reps(result.histogram_limit / 2 + 1, 0);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (2 * p > result.histogram_limit) break;
            for (std::size_t j = i; j < primes.size(); ++j) {
                const std::uint64_t s = p + primes[j];
                if (s > result.histogram_limit) break;
                if (s % 2 == 0) ++reps[s / 2];  // 2 + odd gives odd sums
            }
        }
        for (std::uint64_t e = 4; e <= result.histogram_limit; e += 2)
            ++result.representation_histogram[reps[e / 2]];
    }
    return result;
}

DifferenceScanResult prime_difference_scan(std::uint64_t limit, std::uint64_t search_bound) {
    if (limit % 2 != 0) throw UsageError("prime_difference_scan: limit must be even");
    if (limit < 2) throw UsageError("prime_difference_scan: limit must be >= 2");
    if (search_bound < limit + 3)
        throw UsageError("prime_difference_scan: search_bound must be >= limit + 3");
    if (search_bound > 100'000'000ULL)
        throw UsageError("prime_difference_scan: search_bound above 10^8");

    const auto primes = primes_upto(search_bound);
    DifferenceScanResult result;
    result.limit = limit;
    result.search_bound = search_bound;
    for (std::uint64_t e = 2; e <= limit; e += 2) {
        bool found = false;
        for (std::uint64_t p : primes) {
            // q = p + e checked by the deterministic test; it may lie
            // beyond the sieve.
            if (is_prime_u64(p + e)) {
                result.witnesses.push_back(GoldbachWitness{e, p, p + e, WitnessMode::Difference});
                found = true;
                break;
            }
        }
        if (!found) result.unresolved.push_back(e);
    }
    return result;
}

std::vector<GapPair> gap_pairs(std::uint64_t limit, std::uint64_t gap) {
    if (gap % 2 != 0 || gap == 0) throw UsageError("gap_pairs: gap must be even and positive");
    if (limit > 100'000'000ULL) throw UsageError("gap_pairs: limit above 10^8");

    const auto composite = composite_table(limit + gap);
    std::vector<GapPair> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p] || composite[p + gap]) continue;
        GapPair pair;
        pair.lower = p;
        pair.upper = p + gap;
        pair.gap = gap;
        pair.consecutive = true;
        for (std::uint64_t m = p + 1; m < p + gap; ++m)
            if (!composite[m]) { pair.consecutive = false; break; }
        pair.lower_mod6 = static_cast<std::uint8_t>(p % 6);
        pair.upper_mod6 = static_cast<std::uint8_t>((p + gap) % 6);
        out.push_back(pair);
    }
    return out;
}

std::uint64_t twin_count_independent(std::uint64_t limit) {
    // 6k-1 / 6k+1 candidates plus the leading (3, 5) pair; primality by
    // the deterministic test only.
    std::uint64_t count = 0;
    if (limit >= 3 && is_prime_u64(3) && is_prime_u64(5)) ++count;
    for (std::uint64_t lower = 5; lower <= limit; lower += 6)
        if (is_prime_u64(lower) && is_prime_u64(lower + 2)) ++count;
    return count;
}

std::vector<GapPair> twin_in_coprime_window(std::size_t n) {
    if (n == 0 || n > 10) throw UsageError("twin_in_coprime_window: need 1 <= n <= 10");
    const auto primes = first_n_primes(n + 1);
    const std::uint64_t p_next = primes[n];
    std::uint64_t P = 1;
    for (std::size_t i = 0; i < n; ++i) P *= primes[i];
    const std::uint64_t hi = p_next * p_next;

    std::vector<GapPair> out;
    for (std::uint64_t x = p_next; x + 2 < hi; ++x) {
        if (binary_gcd(x % P, P) != 1 || binary_gcd((x + 2) % P, P) != 1) continue;
        if (!is_prime_u64(x))
            throw IdentityViolationError("twin_in_coprime_window composite", x);
        if (!is_prime_u64(x + 2))
            throw IdentityViolationError("twin_in_coprime_window composite", x + 2);
        GapPair pair;
        pair.lower = x;
        pair.upper = x + 2;
        pair.gap = 2;
        pair.consecutive = true;
        pair.lower_mod6 = static_cast<std::uint8_t>(x % 6);
        pair.upper_mod6 = static_cast<std::uint8_t>((x + 2) % 6);
        out.push_back(pair);
    }
    return out;
}

GapEquationSolution gap_equation_solve(std::size_t n, std::int64_t gap) {
    if (gap % 2 != 0) throw UsageError("gap_equation_solve: gap must be even");
    if (gap < 0) throw UsageError("gap_equation_solve: gap must be nonnegative");
    if (n == 0 || n > 14) throw UsageError("gap_equation_solve: need 1 <= n <= 14");

    const auto primes = first_n_primes(n + 1);
    std::int64_t P = 1;
    for (std::size_t i = 0; i < n; ++i) P *= static_cast<std::int64_t>(primes[i]);
    const auto p_next = static_cast<std::int64_t>(primes[n]);

    GapEquationSolution sol;
    sol.n = n;
    sol.gap = gap;

    // Particular solution from s*P + t*p = 1.
    const ExtGcd e = ext_gcd_i64(P, p_next);
    sol.particular_l = e.s * gap;
    sol.particular_cp = e.t * gap;

    // Unique shift putting delta_cp into [0, P - 2]; parity is forced even
    // because P is even and p_{n+1} is odd.
    std::int64_t cp = ((__int128)e.t * gap) % P;
    if (cp < 0) cp += P;
    sol.delta_cp = cp;
    sol.delta_l = static_cast<std::int64_t>(((__int128)gap - (__int128)p_next * cp) / P);
    sol.identity_ok =
        (__int128)P * sol.delta_l + (__int128)p_next * sol.delta_cp == (__int128)gap;
    sol.delta_l_in_bound = sol.delta_l >= 2 - p_next && sol.delta_l <= p_next - 2;

    // Mixed-radix readout of the particular delta_cp by successive
    // primorial divisions (Euclidean remainders, so digits of a negative
    // value can start negative).
    std::int64_t r = sol.particular_cp;
    for (std::size_t i = n; i-- > 1;) {
        std::int64_t q = 1;
        for (std::size_t j = 0; j < i; ++j) q *= static_cast<std::int64_t>(primes[j]);
        sol.mixed_radix_digits.push_back(r / q);
        r %= q;
    }
    sol.mixed_radix_remainder = r;
    return sol;
}

KWindowReport goldbach_k_window(std::size_t n) {
    if (n < 3 || n > 14) throw UsageError("goldbach_k_window: need 3 <= n <= 14");
    const auto primes = first_n_primes(n + 1);
    const std::uint64_t p_next = primes[n];
    std::uint64_t P_full = 1;
    for (std::size_t i = 0; i <= n; ++i) P_full *= primes[i];

    KWindowReport report;
    report.n = n;
    report.p_next = p_next;
    report.asymptotic_k =
        static_cast<double>(n) -
        3.0 * std::log(static_cast<double>(n)) / (2.0 * std::log(std::log(static_cast<double>(n))));

    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t m = n - k + 1;
        std::uint64_t Pm = 1;
        for (std::size_t i = 0; i < m; ++i) Pm *= primes[i];
        const std::uint64_t window_end = 2 * Pm;
        if (window_end < p_next || window_end > p_next * p_next) continue;

        KWindowChoice choice;
        choice.k = k;
        choice.window_primorial = Pm;
        choice.window_end = window_end;
        choice.audit_ok = true;
        for (std::uint64_t x = 2; x < window_end; ++x) {
            if (binary_gcd(x % P_full, P_full) != 1) continue;
            ++choice.coprime_count;
            if (!is_prime_u64(x)) {
                choice.audit_ok = false;
                if (choice.audit_failures.size() < 16) choice.audit_failures.push_back(x);
            }
        }
        report.feasible.push_back(choice);
    }
    return report;
}

}  // namespace primlab
