#include <doctest.h>

#include <random>
#include <set>

#include <primlab/bitvec.hpp>

using primlab::BitVec;

TEST_CASE("bitvec basic set/test/count") {
    BitVec v(130);
    v.set(0);
    v.set(63);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 4);
    CHECK(v.test(63));
    CHECK(!v.test(62));
    v.reset(63);
    CHECK(!v.test(63));
    CHECK(v.to_vector() == std::vector<std::uint64_t>{0, 64, 129});
}

TEST_CASE("cyclic window matches bit-by-bit reads") {
    std::mt19937_64 rng(7);
    BitVec v(201);
    for (int i = 0; i < 80; ++i) v.set(rng() % 201);
    for (std::uint64_t pos : {0ULL, 1ULL, 63ULL, 64ULL, 137ULL, 190ULL, 200ULL}) {
        const std::uint64_t window = v.cyclic_window(pos);
        for (unsigned i = 0; i < 64; ++i) {
            const bool expected = v.test((pos + i) % 201);
            CHECK(((window >> i) & 1) == (expected ? 1 : 0));
        }
    }
}

TEST_CASE("pair-at-distance probes agree with the quadratic definition") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t size = 65 + rng() % 200;
        BitVec v(size);
        std::set<std::uint64_t> members;
        for (std::uint64_t i = 0; i < size / 3; ++i) {
            const std::uint64_t m = rng() % size;
            v.set(m);
            members.insert(m);
        }
        for (std::uint64_t d = 0; d < size; ++d) {
            bool cyclic = false, linear = false;
            for (std::uint64_t m : members) {
                if (members.count((m + d) % size)) cyclic = true;
                if (m + d < size && members.count(m + d)) linear = true;
            }
            CHECK(v.has_pair_at_cyclic_distance(d) == cyclic);
            CHECK(v.has_pair_at_linear_distance(d) == linear);
        }
    }
}

TEST_CASE("or_shifted dilates without spilling past the end") {
    BitVec src(10);
    src.set(1);
    src.set(9);
    BitVec dst(25);
    dst.or_shifted(src, 0);
    dst.or_shifted(src, 7);
    dst.or_shifted(src, 20);  // 20 + 9 would pass the end and must drop
    CHECK(dst.to_vector() == std::vector<std::uint64_t>{1, 8, 9, 16, 21});
}
