#include "doctest.h"

#include <random>

#include "ramsey/simd/bitset_kernels.hpp"

namespace simd = ramsey::simd;

TEST_CASE("every available kernel table matches the scalar reference") {
    const auto& ref = simd::scalar::table();
    std::mt19937_64 rng(42);
    const auto tables = simd::available();
    REQUIRE(!tables.empty());
    CHECK(tables.front()->name == "scalar");
    for (const auto* t : tables) {
        CAPTURE(t->name);
        for (std::size_t words = 0; words < 70; ++words) {
            std::vector<simd::Word> a(words);
            std::vector<simd::Word> b(words);
            for (auto& w : a) w = rng() & rng();
            for (auto& w : b) w = rng() | rng();
            CHECK(t->popcount(a.data(), words) == ref.popcount(a.data(), words));
            CHECK(t->and_popcount(a.data(), b.data(), words) == ref.and_popcount(a.data(), b.data(), words));
            std::vector<simd::Word> x(words, 1);
            std::vector<simd::Word> y(words, 2);
            ref.and_into(x.data(), a.data(), b.data(), words);
            t->and_into(y.data(), a.data(), b.data(), words);
            CHECK(x == y);
            CHECK(t->any(x.data(), words) == ref.any(x.data(), words));
            std::vector<simd::Word> zero(words, 0);
            CHECK_FALSE(t->any(zero.data(), words));
            if (words > 0) {
                zero[words - 1] = simd::Word{1} << 63;
                CHECK(t->any(zero.data(), words));
            }
        }
    }
}

TEST_CASE("kernel selection by name") {
    const auto before = std::string(simd::active().name);
    CHECK(simd::select("scalar"));
    CHECK(simd::active().name == "scalar");
    CHECK_FALSE(simd::select("no-such-isa"));
    CHECK(simd::select(before));
}

TEST_CASE("span wrappers") {
    std::vector<simd::Word> a{0xffULL, 0x1ULL};
    std::vector<simd::Word> b{0x0fULL, 0x3ULL};
    std::vector<simd::Word> out(2);
    CHECK(simd::popcount(a) == 9);
    CHECK(simd::and_popcount(a, b) == 5);
    simd::and_into(out, a, b);
    CHECK(out == std::vector<simd::Word>{0x0fULL, 0x1ULL});
    CHECK(simd::any(out));
}
