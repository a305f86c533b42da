#include "primlab/diffsets.hpp"

#include <algorithm>

#include "primlab/errors.hpp"
#include "primlab/primes.hpp"

namespace primlab {

std::vector<std::uint64_t> EvenDiffSet::missing_evens(std::uint64_t up_to) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 0; d <= up_to && d < modulus_; d += 2)
        if (!evens_.test(d / 2)) out.push_back(d);
    return out;
}

std::vector<std::uint64_t> EvenDiffSet::to_vector() const {
    std::vector<std::uint64_t> out;
    evens_.for_each_set([&](std::uint64_t half) { out.push_back(2 * half); });
    return out;
}

namespace {

void require_even_modulus(std::uint64_t modulus, const char* what) {
    if (modulus == 0 || modulus % 2 != 0)
        throw UsageError(std::string(what) + ": modulus must be even and nonzero");
}

// Difference sets stay even only when all members share parity.
void require_same_parity(const std::vector<std::uint64_t>& set, const char* what) {
    for (std::size_t i = 1; i < set.size(); ++i)
        if ((set[i] ^ set[0]) & 1)
            throw UsageError(std::string(what) + ": members of mixed parity");
}

constexpr std::size_t kPairwiseLimit = 10'000;

}  // namespace

EvenDiffSet delta_mod_pairwise(const std::vector<std::uint64_t>& set, std::uint64_t modulus) {
    require_even_modulus(modulus, "delta_mod_pairwise");
    require_same_parity(set, "delta_mod_pairwise");
    if (set.size() > kPairwiseLimit)
        throw UsageError("delta_mod_pairwise: set too large for the exhaustive engine");
    BitVec evens(modulus / 2);
    for (std::uint64_t a : set) {
        if (a >= modulus) throw UsageError("delta_mod_pairwise: member >= modulus");
        for (std::uint64_t b : set) {
            const std::uint64_t d = a >= b ? a - b : modulus - (b - a);
            evens.set(d / 2);
        }
    }
    return EvenDiffSet(modulus, std::move(evens));
}

EvenDiffSet delta_mod_autocorr(const BitVec& set, std::uint64_t modulus) {
    require_even_modulus(modulus, "delta_mod_autocorr");
    if (set.size() != modulus)
        throw UsageError("delta_mod_autocorr: bit-vector length must equal modulus");
    BitVec evens(modulus / 2);
    if (set.count() == 0) return EvenDiffSet(modulus, std::move(evens));
    for (std::uint64_t d = 0; d < modulus; d += 2)
        if (set.has_pair_at_cyclic_distance(d)) evens.set(d / 2);
    return EvenDiffSet(modulus, std::move(evens));
}

EvenDiffSet delta_mod(const std::vector<std::uint64_t>& set, std::uint64_t modulus) {
    if (set.size() <= kPairwiseLimit) return delta_mod_pairwise(set, modulus);
    require_same_parity(set, "delta_mod");
    BitVec bits(modulus);
    for (std::uint64_t v : set) {
        if (v >= modulus) throw UsageError("delta_mod: member >= modulus");
        bits.set(v);
    }
    return delta_mod_autocorr(bits, modulus);
}

EvenDiffSet delta_mod(const BitVec& set, std::uint64_t modulus) {
    if (set.count() <= kPairwiseLimit) return delta_mod_pairwise(set.to_vector(), modulus);
    return delta_mod_autocorr(set, modulus);
}

DeltaEvensVerdict verify_delta_all_evens(std::size_t n, std::uint64_t cap) {
    const ResidueSet v = coprime_set_recursive(n, cap);
    // Always the autocorrelation engine: this check is the one place the
    // word-parallel path must be exercised at full modulus scale.
    const EvenDiffSet delta = delta_mod_autocorr(v.members(), v.modulus());
    DeltaEvensVerdict verdict;
    verdict.modulus = v.modulus();
    verdict.ok = delta.is_all_evens();
    if (!verdict.ok) verdict.missing = delta.missing_evens(v.modulus() - 2);
    return verdict;
}

void WindowSpec::validate() const {
    if (n == 0) throw UsageError("WindowSpec: n must be >= 1");
    if (k < 1 || k > n) throw UsageError("WindowSpec: need 1 <= k <= n");
    if (j >= block_count())
        throw UsageError("WindowSpec: j " + std::to_string(j) + " out of range (blocks: " +
                         std::to_string(block_count()) + ")");
}

std::uint64_t WindowSpec::block_width() const {
    auto w = to_u64(primorial(n + 1 - k));
    if (!w) throw UsageError("WindowSpec: block width exceeds 64 bits");
    return *w;
}

std::uint64_t WindowSpec::block_count() const {
    auto c = to_u64(prime_run_product(n + 2 - k, n + 1));
    if (!c) throw UsageError("WindowSpec: block count exceeds 64 bits");
    return *c;
}

std::vector<std::uint64_t> WindowSet::to_vector() const {
    std::vector<std::uint64_t> out;
    offsets.for_each_set([&](std::uint64_t o) { out.push_back(base + o); });
    return out;
}

WindowSet window_set(const WindowSpec& spec, std::uint64_t cap) {
    spec.validate();
    const PrimeBasis basis = PrimeBasis::first(spec.n + 1);
    const std::uint64_t P = basis.primorial_u64_checked(cap, "window_set");
    const std::uint64_t width = spec.block_width();
    const std::uint64_t span = spec.enlarged ? 2 * width : width;
    if (span > cap) throw CapExceededError("window_set", span, cap);

    WindowSet out;
    out.spec = spec;
    out.base = spec.j * width;
    out.span = span;
    out.offsets = BitVec(span);
    // Enlarged windows starting at the last block read past primorial(n+1);
    // membership extends periodically.
    for (std::uint64_t o = 0; o < span; ++o)
        if (binary_gcd((out.base + o) % P, P) == 1) out.offsets.set(o);
    return out;
}

namespace {

// Unreduced difference set of a window, as a bit per even distance d:
// present iff two members sit exactly d apart.
BitVec unreduced_even_distances(const BitVec& offsets) {
    const std::uint64_t span = offsets.size();
    BitVec present(span / 2 + 1);
    for (std::uint64_t d = 0; d < span; d += 2)
        if (offsets.has_pair_at_linear_distance(d)) present.set(d / 2);
    return present;
}

}  // namespace

WindowSupersetVerdict verify_window_superset(const WindowSpec& spec, std::uint64_t cap) {
    WindowSpec enlarged = spec;
    enlarged.enlarged = true;
    const WindowSet u = window_set(enlarged, cap);
    const std::uint64_t width = spec.block_width();

    const BitVec distances = unreduced_even_distances(u.offsets);

    WindowSupersetVerdict verdict;
    verdict.expected = width / 2;  // evens 0, 2, ..., width-2
    for (std::uint64_t d = 0; d + 2 <= width; d += 2) {
        if (distances.test(d / 2)) {
            ++verdict.covered;
        } else if (verdict.missing.size() < 16) {
            verdict.missing.push_back(d);
        }
    }
    verdict.superset_ok = verdict.covered == verdict.expected;

    // Reduced form: fold every unreduced distance d into d mod width and
    // (width - d) mod width; equality with the full even set is required.
    BitVec reduced(width / 2);
    distances.for_each_set([&](std::uint64_t half) {
        const std::uint64_t d = (2 * half) % width;
        reduced.set(d / 2);
        reduced.set(((width - d) % width) / 2);
    });
    verdict.reduced_equality_ok = reduced.count() == width / 2;
    return verdict;
}

K0Result k0_threshold(std::size_t n) {
    if (n == 0) throw UsageError("k0_threshold: n must be >= 1");
    K0Result out;
    out.n = n;
    const auto primes = first_n_primes(n + 2);
    const std::uint64_t target = primes[n + 1];  // p_{n+2}

    // Least k with product(first k-2 primes) > p_{n+2}. The product grows
    // superexponentially, so the search stays tiny for any 64-bit prime.
    BigInt prod = 1;  // empty product for k <= 2
    for (std::size_t k = 1;; ++k) {
        if (prod > target) {
            out.k0 = k;
            break;
        }
        if (k >= 2) prod *= static_cast<unsigned long>(first_n_primes(k - 1).back());
    }

    // Alternative condition k + 1 < p_{n-k} / 2, largest k in [1, n-1].
    // Once false it stays false (left side grows, right side shrinks).
    out.alt_condition_max_k = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (2 * (k + 1) < primes[n - k - 1]) out.alt_condition_max_k = k;
        else break;
    }
    return out;
}

DecompositionVerdict delta_decomposition_check(std::size_t n, std::size_t k, std::uint64_t cap,
                                               std::uint64_t window_multiplier) {
    if (n == 0) throw UsageError("delta_decomposition_check: n must be >= 1");
    if (k > n) throw UsageError("delta_decomposition_check: need k <= n");
    if (window_multiplier < 1)
        throw UsageError("delta_decomposition_check: multiplier must be >= 1");

    const ResidueSet v = coprime_set_recursive(n + 1, cap);
    const std::uint64_t P = v.modulus();
    const EvenDiffSet lhs = delta_mod(v.members(), P);

    DecompositionVerdict verdict;
    verdict.lhs_count = lhs.count();

    // RHS seed: the window delta reduced modulo the block width. k = 0
    // degenerates to the lhs itself (empty progression sum, full window).
    BitVec rhs(P);
    if (k == 0) {
        for (std::uint64_t d = 0; d < P; d += 2)
            if (lhs.contains(d)) rhs.set(d);
    } else {
        const std::uint64_t width = to_u64(primorial(n + 1 - k)).value();
        const std::uint64_t span = window_multiplier * width;
        BitVec offsets(span);
        for (std::uint64_t o = 0; o < span; ++o)
            if (binary_gcd(o % P, P) == 1) offsets.set(o);
        const BitVec distances = unreduced_even_distances(offsets);
        distances.for_each_set([&](std::uint64_t half) {
            const std::uint64_t d = (2 * half) % width;
            rhs.set(d);
            rhs.set((width - d) % width);
        });

        // Minkowski-add primorial(n-j) * [0 : p_{n+1-j} - 1] for j < k by
        // marked-bit dilation.
        const auto primes = first_n_primes(n + 1);
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint64_t step = to_u64(primorial(n - j)).value();
            const std::uint64_t reps = primes[n - j];  // p_{n+1-j}
            BitVec dilated(P);
            for (std::uint64_t t = 0; t < reps; ++t) dilated.or_shifted(rhs, t * step);
            rhs = std::move(dilated);
        }
    }

    verdict.rhs_count = rhs.count();
    for (std::uint64_t d = 0; d < P; d += 2) {
        const bool l = lhs.contains(d), r = rhs.test(d);
        if (l != r) {
            verdict.first_discrepancy = d;
            return verdict;
        }
    }
    verdict.ok = true;
    return verdict;
}

Lemma4Verdict lemma4_check(std::size_t n, std::uint64_t bound_multiplier, std::uint64_t cap) {
    if (n < 2) throw UsageError("lemma4_check: n must be >= 2");
    const PrimeBasis basis = PrimeBasis::first(n + 1);
    const std::uint64_t P = basis.primorial_u64_checked(cap, "lemma4_check");
    const std::uint64_t width = to_u64(primorial(n)).value();
    const std::uint64_t span = bound_multiplier * width;
    if (span > cap) throw CapExceededError("lemma4_check", span, cap);

    BitVec offsets(span);
    for (std::uint64_t o = 0; o < span; ++o)
        if (binary_gcd(o % P, P) == 1) offsets.set(o);
    const BitVec distances = unreduced_even_distances(offsets);

    Lemma4Verdict verdict;
    verdict.unreduced_ok = true;
    for (std::uint64_t d = 0; d + 2 <= width; d += 2) {
        if (!distances.test(d / 2)) {
            verdict.unreduced_ok = false;
            if (verdict.missing.size() < 16) verdict.missing.push_back(d);
        }
    }

    BitVec reduced(width / 2);
    distances.for_each_set([&](std::uint64_t half) {
        const std::uint64_t d = (2 * half) % width;
        reduced.set(d / 2);
        reduced.set(((width - d) % width) / 2);
    });
    verdict.reduced_ok = reduced.count() == width / 2;
    verdict.ok = verdict.unreduced_ok && verdict.reduced_ok;
    return verdict;
}

SumDiffVerdict sum_diff_equivalence(std::size_t n, std::uint64_t cap) {
    const ResidueSet v = coprime_set_recursive(n, cap);
    const std::uint64_t P = v.modulus();
    const EvenDiffSet delta = delta_mod(v.members(), P);

    // Sumset accumulated linearly over [0, 2P), then folded mod P.
    BitVec acc(2 * P);
    v.members().for_each_set([&](std::uint64_t x) { acc.or_shifted(v.members(), x); });
    BitVec sums(P);
    for (std::uint64_t d = 0; d < P; ++d)
        if (acc.test(d) || acc.test(d + P)) sums.set(d);

    SumDiffVerdict verdict;
    verdict.ok = true;
    for (std::uint64_t d = 0; d < P; ++d) {
        const bool s = sums.test(d);
        const bool dd = delta.contains(d);
        if (s != dd) {
            verdict.ok = false;
            verdict.first_mismatch = d;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace primlab
