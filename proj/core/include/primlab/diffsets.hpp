#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primlab/basis.hpp"
#include "primlab/bitvec.hpp"
#include "primlab/residue.hpp"

namespace primlab {

// Difference set reduced modulo an even modulus. Only even residues can
// occur (sources are parity-homogeneous), so storage is one bit per even
// value: bit d/2 holds membership of d.
class EvenDiffSet {
public:
    EvenDiffSet() = default;
    EvenDiffSet(std::uint64_t modulus, BitVec evens)
        : modulus_(modulus), evens_(std::move(evens)) {}

    std::uint64_t modulus() const { return modulus_; }
    bool contains(std::uint64_t d) const {
        return d % 2 == 0 && d < modulus_ && evens_.test(d / 2);
    }
    std::uint64_t count() const { return evens_.count(); }

    /// True iff every even residue in [0, modulus-2] is present.
    bool is_all_evens() const { return evens_.count() == modulus_ / 2; }

    /// Even residues in [0, up_to] that are absent.
    std::vector<std::uint64_t> missing_evens(std::uint64_t up_to) const;

    std::vector<std::uint64_t> to_vector() const;

    bool operator==(const EvenDiffSet& o) const = default;

private:
    std::uint64_t modulus_ = 0;
    BitVec evens_;
};

/// {(x - y) mod modulus : x, y in set}. Dispatches to the exhaustive
/// pairwise engine for |set| <= 10^4 and to the word-parallel shift-AND
/// autocorrelation engine above; both are exact and interchangeable.
EvenDiffSet delta_mod(const std::vector<std::uint64_t>& set, std::uint64_t modulus);
EvenDiffSet delta_mod(const BitVec& set, std::uint64_t modulus);

EvenDiffSet delta_mod_pairwise(const std::vector<std::uint64_t>& set, std::uint64_t modulus);
EvenDiffSet delta_mod_autocorr(const BitVec& set, std::uint64_t modulus);

struct DeltaEvensVerdict {
    bool ok = false;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> missing;  // even residues absent from the delta
};

/// Checks that the delta of V modulo primorial(n) is exactly every even
/// residue [0 : 2 : primorial - 2].
DeltaEvensVerdict verify_delta_all_evens(std::size_t n, std::uint64_t cap = kDefaultCap);

// A (k, j) slice of the mod-primorial(n+1) system: block width is
// primorial(n+1-k), the window starts at block j, and the enlarged form
// spans two blocks instead of one. Intervals are half-open; block
// boundaries are primorial multiples and never coprime.
struct WindowSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t j = 0;
    bool enlarged = true;

    void validate() const;  // throws UsageError on bad ranges
    std::uint64_t block_width() const;   // primorial(n+1-k)
    std::uint64_t block_count() const;   // primorial(n+1) / block_width
};

struct WindowSet {
    WindowSpec spec;
    std::uint64_t base = 0;   // j * block_width
    std::uint64_t span = 0;   // one or two blocks
    BitVec offsets;           // bit o: base + o is coprime to primorial(n+1)

    std::vector<std::uint64_t> to_vector() const;  // absolute values base + o
};

WindowSet window_set(const WindowSpec& spec, std::uint64_t cap = kDefaultCap);

struct WindowSupersetVerdict {
    bool superset_ok = false;        // unreduced delta covers [0:2:width-2]
    bool reduced_equality_ok = false;  // delta mod width equals all evens
    std::uint64_t covered = 0;
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> missing;  // first few uncovered evens
};

/// Lemma check for one window: the unreduced difference set of the
/// enlarged window must contain every even value in [0, width-2]; the
/// reduced difference set must equal the full even system.
WindowSupersetVerdict verify_window_superset(const WindowSpec& spec,
                                             std::uint64_t cap = kDefaultCap);

struct K0Result {
    std::size_t n = 0;
    std::size_t k0 = 0;                 // least k with product(first k-2 primes) > p_{n+2}
    std::size_t alt_condition_max_k = 0;  // largest k in [1, n-1] with k+1 < p_{n-k}/2, else 0
};

K0Result k0_threshold(std::size_t n);

struct DecompositionVerdict {
    bool ok = false;
    std::uint64_t lhs_count = 0;
    std::uint64_t rhs_count = 0;
    std::optional<std::uint64_t> first_discrepancy;
};

/// Full-delta decomposition: delta(V mod primorial(n+1)) must equal the
/// Minkowski sum of the reduced window delta with the arithmetic
/// progressions primorial(n-j) * [0 : p_{n+1-j} - 1], j < k. The window
/// is V intersected with [0, window_multiplier * primorial(n+1-k));
/// multiplier 4 matches the five-block construction used for the k = 1
/// analogue and is the smallest that covers the whole verified range.
DecompositionVerdict delta_decomposition_check(std::size_t n, std::size_t k,
                                               std::uint64_t cap = kDefaultCap,
                                               std::uint64_t window_multiplier = 4);

struct Lemma4Verdict {
    bool ok = false;            // both checks below
    bool unreduced_ok = false;  // unreduced delta covers [0:2:primorial(n)-2]
    bool reduced_ok = false;    // delta mod primorial(n) equals all evens
    std::vector<std::uint64_t> missing;
};

/// Bounded-window coverage: U = V(n+1) within [0, bound_multiplier *
/// primorial(n)). The statement uses multiplier 4; the proof's block
/// construction reaches 5; both are accepted inputs.
Lemma4Verdict lemma4_check(std::size_t n, std::uint64_t bound_multiplier = 4,
                           std::uint64_t cap = kDefaultCap);

struct SumDiffVerdict {
    bool ok = false;
    std::optional<std::uint64_t> first_mismatch;
};

/// (V - V) mod primorial(n) == (V + V) mod primorial(n).
SumDiffVerdict sum_diff_equivalence(std::size_t n, std::uint64_t cap = kDefaultCap);

}  // namespace primlab
