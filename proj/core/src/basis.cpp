#include "primlab/basis.hpp"

#include "primlab/errors.hpp"
#include "primlab/primes.hpp"

namespace primlab {

PrimeBasis::PrimeBasis(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)), primorial_(1) {
    for (std::uint64_t p : primes_) primorial_ *= static_cast<unsigned long>(p);
}

PrimeBasis PrimeBasis::first(std::size_t n) {
    return PrimeBasis(first_n_primes(n));
}

std::uint64_t PrimeBasis::prime(std::size_t i) const {
    if (i < 1 || i > primes_.size())
        throw UsageError("prime index " + std::to_string(i) + " outside basis of size " +
                         std::to_string(primes_.size()));
    return primes_[i - 1];
}

std::uint64_t PrimeBasis::primorial_u64_checked(std::uint64_t cap, const char* what) const {
    auto v = to_u64(primorial_);
    if (!v || *v > cap)
        throw CapExceededError(what, v ? *v : ~0ULL, cap);
    return *v;
}

bool PrimeBasis::verify_product() const {
    BigInt again = 1;
    for (std::uint64_t p : primes_) again *= static_cast<unsigned long>(p);
    return again == primorial_;
}

BigInt primorial(std::size_t n) {
    BigInt out = 1;
    for (std::uint64_t p : first_n_primes(n)) out *= static_cast<unsigned long>(p);
    return out;
}

BigInt prime_run_product(std::size_t lo, std::size_t hi) {
    if (lo < 1 || lo > hi) return 1;
    auto primes = first_n_primes(hi);
    BigInt out = 1;
    for (std::size_t i = lo; i <= hi; ++i) out *= static_cast<unsigned long>(primes[i - 1]);
    return out;
}

}  // namespace primlab
