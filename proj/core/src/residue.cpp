#include "primlab/residue.hpp"

#include <algorithm>
#include <cassert>

#include "primlab/errors.hpp"
#include "primlab/primes.hpp"

namespace primlab {

std::uint64_t ResidueSet::expected_cardinality() const {
    std::uint64_t c = 1;
    for (std::uint64_t p : basis_.primes()) c *= (p - 1);
    return c;
}

namespace {

std::uint64_t checked_modulus(const PrimeBasis& basis, std::uint64_t cap, const char* what) {
    return basis.primorial_u64_checked(cap, what);
}

}  // namespace

ResidueSet coprime_set_sieve(std::size_t n, std::uint64_t cap) {
    if (n == 0) throw UsageError("coprime_set_sieve: n must be >= 1");
    PrimeBasis basis = PrimeBasis::first(n);
    const std::uint64_t P = checked_modulus(basis, cap, "coprime_set_sieve");
    BitVec members(P);
    for (std::uint64_t x = 0; x < P; ++x)
        if (binary_gcd(x, P) == 1) members.set(x);
    return ResidueSet(std::move(basis), std::move(members));
}

ResidueSet coprime_set_recursive(std::size_t n, std::uint64_t cap) {
    if (n == 0) throw UsageError("coprime_set_recursive: n must be >= 1");
    PrimeBasis basis = PrimeBasis::first(n);
    const std::uint64_t target = checked_modulus(basis, cap, "coprime_set_recursive");

    const auto& primes = basis.primes();
    BitVec cur(2);
    cur.set(1);  // V modulo 2 is {1}
    std::uint64_t modulus = 2;
    for (std::size_t m = 1; m < n; ++m) {
        const std::uint64_t p = primes[m];
        const std::uint64_t next_modulus = modulus * p;
        BitVec next(next_modulus);
        cur.for_each_set([&](std::uint64_t v) {
            const std::uint64_t pv = p * v;
            for (std::uint64_t j = 1; j < p; ++j) {
                std::uint64_t e = pv + modulus * j;
                if (e >= next_modulus) e -= next_modulus;
                next.set(e);
            }
        });
        cur = std::move(next);
        modulus = next_modulus;
    }
    assert(modulus == target);
    return ResidueSet(std::move(basis), std::move(cur));
}

namespace {

// Shared recursion core: extends a coprime system for `old_primes` with
// modulus `old_mod` by the prime p placed at the bottom of the run.
BitVec extend_run(const BitVec& cur, std::uint64_t old_mod, std::uint64_t p) {
    const std::uint64_t next_mod = old_mod * p;
    BitVec next(next_mod);
    cur.for_each_set([&](std::uint64_t w) {
        const std::uint64_t pw = p * w;
        for (std::uint64_t j = 1; j < p; ++j) {
            std::uint64_t e = pw + old_mod * j;
            if (e >= next_mod) e -= next_mod;
            next.set(e);
        }
    });
    return next;
}

std::uint64_t run_modulus_checked(const std::vector<std::uint64_t>& primes, std::size_t lo,
                                  std::size_t hi, std::uint64_t cap, const char* what) {
    BigInt prod = 1;
    for (std::size_t i = lo; i <= hi; ++i) prod *= static_cast<unsigned long>(primes[i - 1]);
    auto v = to_u64(prod);
    if (!v || *v > cap) throw CapExceededError(what, v ? *v : ~0ULL, cap);
    return *v;
}

}  // namespace

WSet w_set(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (n == 0 || k < 1 || k > n)
        throw UsageError("w_set: need 1 <= k <= n");
    const auto primes = first_n_primes(n + 1);
    const std::size_t lo = n - k + 2, hi = n + 1;
    const std::uint64_t modulus = run_modulus_checked(primes, lo, hi, cap, "w_set");

    // w_1 = [1 : p_{n+1} - 1]; each further step adds the next prime
    // below the run.
    const std::uint64_t top = primes[hi - 1];
    BitVec cur(top);
    for (std::uint64_t j = 1; j < top; ++j) cur.set(j);
    std::uint64_t cur_mod = top;
    for (std::size_t idx = hi - 1; idx >= lo; --idx) {
        cur = extend_run(cur, cur_mod, primes[idx - 1]);
        cur_mod *= primes[idx - 1];
    }
    assert(cur_mod == modulus);
    return WSet{lo, hi, cur_mod, std::move(cur)};
}

WSet w_set_sieve(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (n == 0 || k < 1 || k > n)
        throw UsageError("w_set_sieve: need 1 <= k <= n");
    const auto primes = first_n_primes(n + 1);
    const std::size_t lo = n - k + 2, hi = n + 1;
    const std::uint64_t modulus = run_modulus_checked(primes, lo, hi, cap, "w_set_sieve");
    BitVec members(modulus);
    for (std::uint64_t x = 0; x < modulus; ++x)
        if (binary_gcd(x, modulus) == 1) members.set(x);
    return WSet{lo, hi, modulus, std::move(members)};
}

ResidueSet reconstruct_from_w(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (n == 0 || k < 1 || k > n)
        throw UsageError("reconstruct_from_w: need 1 <= k <= n");
    PrimeBasis basis = PrimeBasis::first(n + 1);
    const std::uint64_t P = checked_modulus(basis, cap, "reconstruct_from_w");

    const WSet w = w_set(n, k, cap);
    const ResidueSet base = coprime_set_recursive(n - k + 1, cap);
    const std::uint64_t run_prod = w.modulus;
    const std::uint64_t base_prod = base.modulus();

    BitVec out(P);
    base.members().for_each_set([&](std::uint64_t v) {
        const std::uint64_t rv = run_prod * v % P;
        w.members.for_each_set([&](std::uint64_t wv) {
            out.set((rv + base_prod * wv) % P);
        });
    });
    return ResidueSet(std::move(basis), std::move(out));
}

ModScaleImage mod_scale_image(std::uint64_t x, std::uint64_t y) {
    if (y < 2) throw UsageError("mod_scale_image: y must be >= 2");
    if (y > 100'000'000ULL)
        throw UsageError("mod_scale_image: y too large to materialize");
    ModScaleImage out;
    out.x = x;
    out.y = y;
    out.values.reserve(y - 1);
    BitVec seen(y);
    bool repeats = false;
    for (std::uint64_t i = 1; i < y; ++i) {
        const std::uint64_t v = mulmod_u64(x % y, i, y);
        out.values.push_back(v);
        if (v == 0 || seen.test(v)) repeats = true;
        else seen.set(v);
    }
    out.is_permutation = !repeats;
    return out;
}

bool scale_set_check(std::uint64_t y, std::size_t n, std::uint64_t cap) {
    const ResidueSet v = coprime_set_recursive(n, cap);
    const std::uint64_t P = v.modulus();
    BitVec image(P);
    v.members().for_each_set([&](std::uint64_t m) { image.set(mulmod_u64(y % P, m, P)); });
    return image == v.members();
}

std::vector<std::uint64_t> prime_window(std::size_t n) {
    if (n == 0) throw UsageError("prime_window: n must be >= 1");
    const auto primes = first_n_primes(n + 1);
    const std::uint64_t next = primes[n];
    BigInt P = 1;
    for (std::size_t i = 0; i < n; ++i) P *= static_cast<unsigned long>(primes[i]);
    const auto Pu = to_u64(P);
    if (!Pu) throw UsageError("prime_window: basis too large");

    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 2; x < next * next; ++x) {
        if (binary_gcd(x % *Pu, *Pu) != 1) continue;
        if (!is_prime_u64(x))
            throw IdentityViolationError("prime_window composite at n=" + std::to_string(n), x);
        out.push_back(x);
    }
    return out;
}

}  // namespace primlab
