#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace primlab {

// Dense bit vector backed by 64-bit words. Bit x models membership of the
// residue x in a set over [0, size). Trailing bits above size stay zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::uint64_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::uint64_t size() const { return size_; }

    void set(std::uint64_t i) {
        assert(i < size_);
        words_[i >> 6] |= (1ULL << (i & 63));
    }
    void reset(std::uint64_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(1ULL << (i & 63));
    }
    bool test(std::uint64_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool operator==(const BitVec& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }

    std::vector<std::uint64_t> to_vector() const {
        std::vector<std::uint64_t> out;
        out.reserve(count());
        for_each_set([&](std::uint64_t i) { out.push_back(i); });
        return out;
    }

    template <typename Fn>
    void for_each_set(Fn fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn((w << 6) + static_cast<std::uint64_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    // 64 bits of the cyclic sequence starting at bit pos: result bit i is
    // test((pos + i) mod size). Fast path when the window does not wrap.
    std::uint64_t cyclic_window(std::uint64_t pos) const {
        assert(pos < size_);
        if (pos + 64 <= size_) {
            const std::uint64_t w = pos >> 6, off = pos & 63;
            std::uint64_t lo = words_[w] >> off;
            if (off != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - off);
            return lo;
        }
        std::uint64_t out = 0;
        for (unsigned i = 0; i < 64; ++i) {
            std::uint64_t j = pos + i;
            if (j >= size_) j -= size_;
            if (test(j)) out |= (1ULL << i);
        }
        return out;
    }

    // True iff some member m has (m + d) mod size also a member. This is
    // the word-parallel probe behind the difference-set autocorrelation
    // engine; hits are dense in practice so the early exit usually fires
    // within the first word.
    bool has_pair_at_cyclic_distance(std::uint64_t d) const {
        assert(size_ > 0);
        d %= size_;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] == 0) continue;
            std::uint64_t base = w << 6;
            std::uint64_t shifted = cyclic_window((base + d) % size_);
            if (words_[w] & shifted) return true;
        }
        return false;
    }

    // 64 bits starting at pos without wrap; bits past size read as zero.
    std::uint64_t linear_window(std::uint64_t pos) const {
        if (pos >= size_) return 0;
        const std::uint64_t w = pos >> 6, off = pos & 63;
        std::uint64_t lo = words_[w] >> off;
        if (off != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - off);
        if (size_ - pos < 64) lo &= (1ULL << (size_ - pos)) - 1;
        return lo;
    }

    // True iff some member m has m + d also a member (no wrap).
    bool has_pair_at_linear_distance(std::uint64_t d) const {
        if (d >= size_) return false;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] == 0) continue;
            const std::uint64_t base = (w << 6);
            if (base + d >= size_) break;
            if (words_[w] & linear_window(base + d)) return true;
        }
        return false;
    }

    // self |= (src << shift); bits shifted beyond size are dropped.
    void or_shifted(const BitVec& src, std::uint64_t shift) {
        assert(src.size_ <= size_);
        if (shift >= size_) return;
        const std::uint64_t ws = shift >> 6, off = shift & 63;
        for (std::size_t w = 0; w < src.words_.size(); ++w) {
            std::uint64_t v = src.words_[w];
            if (v == 0) continue;
            std::size_t dst = w + ws;
            if (dst < words_.size()) words_[dst] |= v << off;
            if (off != 0 && dst + 1 < words_.size()) words_[dst + 1] |= v >> (64 - off);
        }
        clear_tail();
    }

private:
    void clear_tail() {
        const unsigned tail = size_ & 63;
        if (tail != 0 && !words_.empty()) words_.back() &= (1ULL << tail) - 1;
    }

    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace primlab
