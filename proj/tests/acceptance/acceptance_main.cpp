// Acceptance suite: one criterion per --criterion N (1..12), or all when
// no selector is given. Each criterion prints a single [PASS]/[FAIL] line
// with its measurements; the process exits nonzero if any selected
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include <primlab/conjectures.hpp>
#include <primlab/counting.hpp>
#include <primlab/crt.hpp>
#include <primlab/diffsets.hpp>
#include <primlab/errors.hpp>
#include <primlab/residue.hpp>

using namespace primlab;

namespace {

struct Criterion {
    int id;
    const char* title;
    bool (*run)(std::string& detail);
    double budget_seconds;  // 0 = untimed
};

bool crit1_recursion_vs_sieve(std::string& detail) {
    for (std::size_t n = 1; n <= 7; ++n) {
        const ResidueSet rec = coprime_set_recursive(n);
        const ResidueSet sv = coprime_set_sieve(n);
        if (!(rec.members() == sv.members())) {
            detail = "bit mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..7 bit-identical (modulus up to 510510)";
    return true;
}

bool crit2_worked_examples(std::string& detail) {
    if (coprime_set_recursive(2).to_vector() != std::vector<std::uint64_t>{1, 5}) {
        detail = "V mod 6 != {1,5}";
        return false;
    }
    if (coprime_set_recursive(3).to_vector() !=
        std::vector<std::uint64_t>{1, 7, 11, 13, 17, 19, 23, 29}) {
        detail = "V mod 30 mismatch";
        return false;
    }
    std::vector<std::uint64_t> evens30;
    for (std::uint64_t d = 0; d <= 28; d += 2) evens30.push_back(d);
    if (delta_mod(coprime_set_recursive(3).members(), 30).to_vector() != evens30) {
        detail = "delta V mod 30 != {0,2,...,28}";
        return false;
    }
    const struct { std::size_t n, k; std::uint64_t top; } bullets[] = {
        {3, 1, 28}, {4, 1, 208}, {4, 2, 28}};
    for (const auto& b : bullets) {
        const auto v = verify_window_superset(WindowSpec{b.n, b.k, 0, true});
        if (!v.superset_ok || !v.reduced_equality_ok || v.expected != b.top / 2 + 1) {
            detail = "delta U^" + std::to_string(b.k) + " at n=" + std::to_string(b.n) +
                     " missed its even range [0.." + std::to_string(b.top) + "]";
            return false;
        }
    }
    detail = "V sets, delta V mod 30, and all three delta U bullets reproduce exactly";
    return true;
}

bool crit3_delta_all_evens(std::string& detail) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto v = verify_delta_all_evens(n);
        if (!v.ok) {
            detail = "n=" + std::to_string(n) + " missing " +
                     std::to_string(v.missing.size()) + " evens";
            return false;
        }
    }
    detail = "delta V = all evens for n=2..6 (modulus up to 30030)";
    return true;
}

bool crit4_decomposition(std::string& detail) {
    int checked = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t kmax = std::min(n - 1, k0_threshold(n).k0);
        for (std::size_t k = 0; k <= kmax; ++k) {
            const auto v = delta_decomposition_check(n, k);
            ++checked;
            if (!v.ok) {
                detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " first discrepancy " +
                         (v.first_discrepancy ? std::to_string(*v.first_discrepancy) : "?");
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " (n,k) pairs, exact set equality";
    return true;
}

bool crit5_prime_windows(std::string& detail) {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        try {
            total += prime_window(n).size();
        } catch (const IdentityViolationError& e) {
            detail = std::string("composite found: ") + e.what();
            return false;
        }
    }
    detail = std::to_string(total) + " window elements, all prime, n=1..8";
    return true;
}

bool crit6_psi_engines(std::string& detail) {
    std::mt19937_64 rng(0);
    const auto pool = first_n_primes(20);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t x = rng() % 100'001;
        std::vector<std::uint64_t> qs;
        for (std::uint64_t p : pool)
            if (rng() % 3 == 0 && qs.size() < 10) qs.push_back(p);
        const PrimeSetQ q = PrimeSetQ::make(qs);
        const std::uint64_t scan = psi_brute(x, q);
        if (psi_inclusion_exclusion(x, q) != scan || psi_recursive(x, q) != scan) {
            detail = "mismatch at x=" + std::to_string(x);
            return false;
        }
    }
    detail = "1000 random instances, three engines identical";
    return true;
}

bool crit7_reflection(std::string& detail) {
    const std::vector<std::vector<std::uint64_t>> q_sets = {
        {3, 5},  {3, 7},  {5, 7},  {3, 5, 7}, {5, 11},
        {7, 11}, {3, 11}, {5, 13}, {3, 5, 11}, {7, 13}};
    std::mt19937_64 rng(0);
    std::uint64_t checked = 0;
    for (const auto& qs : q_sets) {
        const PrimeSetQ q = PrimeSetQ::make(qs, 2.0);
        const std::uint64_t P = static_cast<std::uint64_t>(q.product().get_ui());
        std::uint64_t reflections = 0;
        while (reflections < 200) {
            const std::uint64_t x = 1 + rng() % (P - 1);
            const auto v = psi_shift_reflect_check(x, q, 0);
            if (!v.checked_reflection) continue;  // non-coprime draw
            ++reflections;
            ++checked;
            if (!v.reflection_ok) {
                detail = "violation at x=" + std::to_string(x);
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " coprime reflections exact over 10 Q sets";
    return true;
}

bool crit8_mertens_trend(std::string& detail) {
    const long double ln_ratio_4 = std::log(100.0L) / std::log(10'000.0L);
    const long double ln_ratio_6 = std::log(100.0L) / std::log(1'000'000.0L);
    const long double prod_4 = mertens_product(100, 10'000);
    const long double prod_6 = mertens_product(100, 1'000'000);
    const double rel_4 = static_cast<double>(std::fabs(prod_4 - ln_ratio_4) / prod_4);
    const double rel_6 = static_cast<double>(std::fabs(prod_6 - ln_ratio_6) / prod_6);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "rel err %.4f at (100,1e6), %.4f at (100,1e4)", rel_6, rel_4);
    detail = buf;
    if (rel_6 > 0.25) {
        detail += "; 25% bound exceeded";
        return false;
    }
    if (!(rel_6 < rel_4)) {
        // The trend clause asks the error to shrink with x, but the
        // error term is governed by the fixed y = 100 alone; measured, it
        // grows toward |eps(y)| as x rises. The absolute gap does shrink.
        std::snprintf(buf, sizeof(buf),
                      "; trend violated (abs gap %.5f -> %.5f does shrink)",
                      static_cast<double>(std::fabs(prod_4 - ln_ratio_4)),
                      static_cast<double>(std::fabs(prod_6 - ln_ratio_6)));
        detail += buf;
        return false;
    }
    return true;
}

bool crit9_error_bound(std::string& detail) {
    double fitted_c = 0;
    for (const std::uint64_t x : {1'000ULL, 100'000ULL, 1'000'000ULL}) {
        for (const std::size_t n : {1UL, 2UL, 4UL}) {
            const auto rows = appendix_error_profile(x, n, 8);
            for (const auto& row : rows) {
                if (row.abs_error > std::pow(2.0, static_cast<double>(row.m))) {
                    detail = "2^m bound broken at x=" + std::to_string(x) +
                             " n=" + std::to_string(n) + " m=" + std::to_string(row.m);
                    return false;
                }
                if (row.m == 1 && row.abs_error > 1.0) {
                    detail = "m=1 error above 1 at x=" + std::to_string(x);
                    return false;
                }
                fitted_c = std::max(fitted_c, row.ratio);
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "all errors <= 2^m, m=1 errors <= 1; fitted C = %.3f",
                  fitted_c);
    detail = buf;
    return true;
}

bool crit10_goldbach(std::string& detail) {
    GoldbachScanOptions opts;
    opts.jobs = 2;
    opts.revalidate_all = true;
    opts.histogram_limit = 0;
    const auto result = goldbach_scan(1'000'000, opts);
    if (!result.failures.empty()) {
        detail = "failure at e=" + std::to_string(result.failures.front());
        return false;
    }
    if (!result.revalidation_failures.empty() || result.revalidated != result.evens_scanned) {
        detail = "witness revalidation failed";
        return false;
    }
    const std::uint64_t twins_sieve = gap_pairs(1'000'000, 2).size();
    const std::uint64_t twins_mr = twin_count_independent(1'000'000);
    if (twins_sieve != twins_mr) {
        detail = "twin counts disagree: " + std::to_string(twins_sieve) + " vs " +
                 std::to_string(twins_mr);
        return false;
    }
    detail = std::to_string(result.evens_scanned) + " evens, 0 failures, all witnesses " +
             "revalidated; twin count " + std::to_string(twins_sieve) + " from both passes";
    return true;
}

bool crit11_twin_windows(std::string& detail) {
    std::size_t total = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        std::vector<GapPair> pairs;
        try {
            pairs = twin_in_coprime_window(n);
        } catch (const IdentityViolationError& e) {
            detail = std::string("non-prime pair member: ") + e.what();
            return false;
        }
        if (pairs.empty()) {
            detail = "empty window at n=" + std::to_string(n);
            return false;
        }
        for (const auto& p : pairs)
            if (!is_prime_u64(p.lower) || !is_prime_u64(p.upper) || p.upper != p.lower + 2) {
                detail = "invalid twin pair at n=" + std::to_string(n);
                return false;
            }
        total += pairs.size();
    }
    detail = std::to_string(total) + " twin pairs across n=2..8, all revalidated";
    return true;
}

bool crit12_gap_equation(std::string& detail) {
    for (std::size_t n = 2; n <= 8; ++n) {
        std::int64_t P = 1;
        for (std::uint64_t p : first_n_primes(n)) P *= static_cast<std::int64_t>(p);
        for (std::int64_t gap : {2LL, 4LL, 6LL}) {
            const auto sol = gap_equation_solve(n, gap);
            if (!sol.identity_ok || sol.delta_cp % 2 != 0 || sol.delta_cp < 0 ||
                sol.delta_cp > P - 2) {
                detail = "bad solution at n=" + std::to_string(n) +
                         " gap=" + std::to_string(gap);
                return false;
            }
            if (n <= 4) {  // exhaustive even scan
                const auto p_next =
                    static_cast<std::int64_t>(first_n_primes(n + 1)[n]);
                std::int64_t hits = 0, found = -1;
                for (std::int64_t cp = 0; cp <= P - 2; cp += 2)
                    if ((gap - p_next * cp) % P == 0) { ++hits; found = cp; }
                if (hits != 1 || found != sol.delta_cp) {
                    detail = "scan disagrees at n=" + std::to_string(n) +
                             " gap=" + std::to_string(gap);
                    return false;
                }
            }
        }
    }
    detail = "n=2..8, gap in {2,4,6}: exact identity, delta_cp in range, scans agree";
    return true;
}

const Criterion kCriteria[] = {
    {1, "Theorem 1 recursion == gcd sieve, n=1..7", crit1_recursion_vs_sieve, 10.0},
    {2, "paper worked examples reproduce exactly", crit2_worked_examples, 0.0},
    {3, "delta V covers all evens, n=2..6", crit3_delta_all_evens, 60.0},
    {4, "window delta decomposition, n<=5, k<=min(n-1,k0)", crit4_decomposition, 120.0},
    {5, "prime windows composite-free, n=1..8", crit5_prime_windows, 5.0},
    {6, "psi engines agree on 1000 random instances", crit6_psi_engines, 60.0},
    {7, "reflection identity exact, 200 x per Q, 10 Qs", crit7_reflection, 0.0},
    {8, "Mertens product vs ln ratio: 25% bound and x-trend", crit8_mertens_trend, 30.0},
    {9, "appendix error bounds: 2^m, m=1 <= 1, fitted C", crit9_error_bound, 0.0},
    {10, "Goldbach to 1e6: no failures, witnesses revalidated, twin counts match",
     crit10_goldbach, 30.0},
    {11, "twin windows nonempty and prime, n=2..8", crit11_twin_windows, 0.0},
    {12, "gap equation normalized solutions, n=2..8", crit12_gap_equation, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (selected != 0 && criterion.id != selected) continue;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
            ok = false;
            detail += " [over budget " + std::to_string(criterion.budget_seconds) + "s]";
        }
        std::printf("[%s] criterion %2d: %s | %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                    criterion.id, criterion.title, detail.c_str(), seconds);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
