#pragma once

#include <cstdint>
#include <vector>

#include "primlab/basis.hpp"
#include "primlab/bitvec.hpp"

namespace primlab {

// Coprime residue system modulo a primorial: bit x is set iff
// gcd(x, primorial) = 1 and 0 <= x < primorial. Immutable after
// construction; safe to share across threads.
class ResidueSet {
public:
    ResidueSet(PrimeBasis basis, BitVec members)
        : basis_(std::move(basis)), members_(std::move(members)) {}

    const PrimeBasis& basis() const { return basis_; }
    std::uint64_t modulus() const { return members_.size(); }
    const BitVec& members() const { return members_; }

    bool contains(std::uint64_t x) const { return members_.test(x); }
    std::uint64_t cardinality() const { return members_.count(); }

    /// Product of (p_i - 1) over the basis; the exact expected cardinality.
    std::uint64_t expected_cardinality() const;

    std::vector<std::uint64_t> to_vector() const { return members_.to_vector(); }

private:
    PrimeBasis basis_;
    BitVec members_;
};

/// Ground-truth construction: a gcd scan of [0, primorial). Every other
/// construction is checked against this one.
ResidueSet coprime_set_sieve(std::size_t n, std::uint64_t cap = kDefaultCap);

/// Bottom-up construction without any gcd call: each step maps the
/// previous system V through p*V + P*[1 : p-1], reduced at the new
/// primorial. Bit-identical to coprime_set_sieve by contract.
ResidueSet coprime_set_recursive(std::size_t n, std::uint64_t cap = kDefaultCap);

// Coprime system of a top-k prime run {p_{n-k+2}, ..., p_{n+1}}, modulo
// the product of that run. Indices are 1-based over true primes.
struct WSet {
    std::size_t lower_basis_index = 0;  // n - k + 2
    std::size_t upper_basis_index = 0;  // n + 1
    std::uint64_t modulus = 0;
    BitVec members;

    std::vector<std::uint64_t> to_vector() const { return members.to_vector(); }
};

/// w_k for the run ending at p_{n+1}, built by the run recursion
/// w_{k+1} = w_k * p_new + (run product) * [1 : p_new - 1]. 1 <= k <= n.
WSet w_set(std::size_t n, std::size_t k, std::uint64_t cap = kDefaultCap);

/// gcd-scan oracle for the same run.
WSet w_set_sieve(std::size_t n, std::size_t k, std::uint64_t cap = kDefaultCap);

/// Rebuilds V_{n+1} from V_{n-k+1} and w_k:
/// (run product) * V_{n-k+1} + w_k * primorial(n-k+1), reduced mod
/// primorial(n+1). Equals coprime_set_sieve(n+1) when the lemma holds.
ResidueSet reconstruct_from_w(std::size_t n, std::size_t k, std::uint64_t cap = kDefaultCap);

// Image of [1 : y-1] under multiplication by x mod y, kept in scan order
// (index i-1 holds (x*i) mod y). A coprime x permutes [1 : y-1]; any
// shared factor collapses the image and is flagged, not thrown.
struct ModScaleImage {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::vector<std::uint64_t> values;
    bool is_permutation = false;
};

ModScaleImage mod_scale_image(std::uint64_t x, std::uint64_t y);

/// True iff (y * V) mod primorial(n) equals V bit-for-bit. Non-coprime y
/// give false by construction.
bool scale_set_check(std::uint64_t y, std::size_t n, std::uint64_t cap = kDefaultCap);

/// All integers in (1, p_{n+1}^2) coprime to primorial(n), by periodic
/// extension. Every element is asserted prime with the deterministic
/// 64-bit test; a composite throws IdentityViolationError, since it would
/// falsify the prime-window corollary.
std::vector<std::uint64_t> prime_window(std::size_t n);

}  // namespace primlab
