#include "primlab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <unordered_map>

#include "primlab/errors.hpp"

namespace primlab {

PrimeSetQ PrimeSetQ::make(std::vector<std::uint64_t> primes, double y_floor) {
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime_u64(primes[i]))
            throw UsageError("PrimeSetQ: " + std::to_string(primes[i]) + " is not prime");
        if (i > 0 && primes[i] == primes[i - 1])
            throw UsageError("PrimeSetQ: duplicate prime " + std::to_string(primes[i]));
    }
    if (!primes.empty() && y_floor >= static_cast<double>(primes.front()))
        throw UsageError("PrimeSetQ: y_floor must be below the smallest prime");
    PrimeSetQ q;
    q.primes_ = std::move(primes);
    q.product_ = 1;
    for (std::uint64_t p : q.primes_) q.product_ *= static_cast<unsigned long>(p);
    q.y_floor_ = y_floor;
    return q;
}

std::uint64_t psi_inclusion_exclusion(std::uint64_t x, const PrimeSetQ& q) {
    const auto& primes = q.primes();
    std::int64_t total = 0;
    // Depth-first over subset products, ascending primes, pruning once the
    // product exceeds x (every extension would too).
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t prod,
                   std::int64_t sign) -> void {
        total += sign * static_cast<std::int64_t>(x / prod);
        for (std::size_t i = start; i < primes.size(); ++i) {
            if (primes[i] > x / prod) break;
            self(self, i + 1, prod * primes[i], -sign);
        }
    };
    rec(rec, 0, 1, 1);
    return static_cast<std::uint64_t>(total);
}

namespace {

// Bounded LRU memo for the Legendre recursion, keyed on (value, index).
// Valid only for a fixed prime list, hence one cache per top-level call.
class LegendreMemo {
public:
    explicit LegendreMemo(std::size_t capacity) : capacity_(capacity) {}

    bool lookup(std::uint64_t key, std::uint64_t& value) {
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        order_.splice(order_.begin(), order_, it->second.second);
        value = it->second.first;
        return true;
    }

    void insert(std::uint64_t key, std::uint64_t value) {
        if (map_.size() >= capacity_) {
            map_.erase(order_.back());
            order_.pop_back();
        }
        order_.push_front(key);
        map_[key] = {value, order_.begin()};
    }

private:
    std::size_t capacity_;
    std::list<std::uint64_t> order_;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::list<std::uint64_t>::iterator>> map_;
};

constexpr std::size_t kMemoCapacity = 1'000'000;

std::uint64_t legendre(std::uint64_t x, std::size_t m,
                       const std::vector<std::uint64_t>& primes, LegendreMemo& memo) {
    if (m == 0) return x;
    if (x == 0) return 0;
    const std::uint64_t key = (x << 8) | static_cast<std::uint64_t>(m);
    std::uint64_t cached;
    if (memo.lookup(key, cached)) return cached;
    const std::uint64_t result = legendre(x, m - 1, primes, memo) -
                                 legendre(x / primes[m - 1], m - 1, primes, memo);
    memo.insert(key, result);
    return result;
}

}  // namespace

std::uint64_t psi_recursive(std::uint64_t x, const PrimeSetQ& q) {
    if (q.primes().size() >= 256 || x >= (1ULL << 56))
        throw UsageError("psi_recursive: arguments outside the memo key range");
    LegendreMemo memo(kMemoCapacity);
    return legendre(x, q.primes().size(), q.primes(), memo);
}

std::uint64_t psi_brute(std::uint64_t x, const PrimeSetQ& q) {
    if (x > 100'000'000ULL) throw UsageError("psi_brute: x too large to scan");
    std::vector<std::uint8_t> marked(x + 1, 0);
    for (std::uint64_t p : q.primes())
        for (std::uint64_t m = p; m <= x; m += p) marked[m] = 1;
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= x; ++i)
        if (!marked[i]) ++count;
    return count;
}

std::uint64_t coprime_pi(std::uint64_t x, std::size_t n) {
    const PrimeSetQ q = PrimeSetQ::make(first_n_primes(n));
    const std::uint64_t by_ie = psi_inclusion_exclusion(x, q);
    if (x <= 1'000'000ULL) {
        const std::uint64_t by_scan = psi_brute(x, q);
        if (by_scan != by_ie)
            throw IdentityViolationError("coprime_pi engines disagree at x", x);
    }
    return by_ie;
}

ShiftReflectVerdict psi_shift_reflect_check(std::uint64_t x, const PrimeSetQ& q,
                                            std::uint64_t k) {
    ShiftReflectVerdict verdict;
    const auto pq = to_u64(q.product());
    if (!pq) throw UsageError("psi_shift_reflect_check: product of Q exceeds 64 bits");
    const std::uint64_t P = *pq;
    const auto y_int = static_cast<std::uint64_t>(std::floor(std::max(q.y_floor(), 0.0)));

    verdict.psi_x = psi_inclusion_exclusion(x, q);

    // Translation: count the shifted window directly by gcd scan, then add
    // back the y untouched integers. Ill-posed for x < y (the lemma's
    // standing hypothesis is y <= x), so such draws are skipped.
    if (x + k * P > 100'000'000ULL)
        throw UsageError("psi_shift_reflect_check: shifted window too large to scan");
    if (x >= y_int) {
        verdict.checked_translation = true;
        std::uint64_t window_count = 0;
        for (std::uint64_t i = y_int + k * P + 1; i <= x + k * P; ++i)
            if (binary_gcd(i % P, P) == 1) ++window_count;
        verdict.translation_ok = verdict.psi_x == window_count + y_int;
    }

    if (x < P && binary_gcd(x % P, P) == 1) {
        verdict.checked_reflection = true;
        verdict.psi_reflected = psi_inclusion_exclusion(P - x, q);
        std::uint64_t phi = 1;
        for (std::uint64_t p : q.primes()) phi *= (p - 1);
        verdict.psi_full_period = psi_inclusion_exclusion(P, q);
        verdict.reflection_ok = verdict.psi_x + verdict.psi_reflected == phi + 1 &&
                                verdict.psi_full_period == phi;
    }
    return verdict;
}

PsiEstimates psi_estimate(std::uint64_t x, double y, const PrimeSetQ& q) {
    if (y < 1.5 || y > static_cast<double>(x))
        throw UsageError("psi_estimate: need 1.5 <= y <= x");
    PsiEstimates out;
    if (q.primes().size() <= 25) {
        out.exact = psi_inclusion_exclusion(x, q);
        out.engine = "inclusion-exclusion";
    } else {
        out.exact = psi_brute(x, q);
        out.engine = "brute";
    }

    long double prod = 1.0L;
    for (std::uint64_t p : q.primes()) prod *= (1.0L - 1.0L / static_cast<long double>(p));
    const long double xd = static_cast<long double>(x), yd = y;
    out.product_estimate = static_cast<double>((xd - yd) * prod + yd);
    out.mertens_estimate =
        static_cast<double>((xd - yd) * (std::log(yd) / std::log(static_cast<long double>(xd))) + yd);
    const double denom = std::max<double>(static_cast<double>(out.exact), 1.0);
    out.product_rel_error = std::abs(static_cast<double>(out.exact) - out.product_estimate) / denom;
    out.mertens_rel_error = std::abs(static_cast<double>(out.exact) - out.mertens_estimate) / denom;
    return out;
}

long double mertens_product(std::uint64_t y, std::uint64_t x) {
    if (x > 100'000'000ULL) throw UsageError("mertens_product: x too large to sieve");
    long double prod = 1.0L;
    for (std::uint64_t p : primes_upto(x))
        if (p > y) prod *= (1.0L - 1.0L / static_cast<long double>(p));
    return prod;
}

std::vector<ErrorProfileRow> appendix_error_profile(std::uint64_t x, std::size_t n,
                                                    std::size_t m_max) {
    if (x > 10'000'000ULL) throw UsageError("appendix_error_profile: x must be <= 10^7");
    if (n == 0 || m_max == 0)
        throw UsageError("appendix_error_profile: need n >= 1 and m_max >= 1");
    const auto primes = first_n_primes(n + m_max - 1);
    std::vector<ErrorProfileRow> rows;
    rows.reserve(m_max);
    long double prod = 1.0L;
    std::vector<std::uint64_t> qs;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const std::uint64_t p = primes[n + m - 2];  // p_{n+m-1}
        qs.push_back(p);
        prod *= (1.0L - 1.0L / static_cast<long double>(p));
        ErrorProfileRow row;
        row.m = m;
        row.last_prime = p;
        row.exact = psi_inclusion_exclusion(x, PrimeSetQ::make(qs));
        row.expected = static_cast<double>(static_cast<long double>(x) * prod);
        row.abs_error = std::abs(static_cast<double>(row.exact) - row.expected);
        row.f_value = static_cast<double>(x) /
                      (std::log(static_cast<double>(x)) * std::log(static_cast<double>(n + m)));
        row.ratio = row.f_value > 0 ? row.abs_error / row.f_value : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace primlab
