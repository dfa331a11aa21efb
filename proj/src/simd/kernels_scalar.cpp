#include "ramsey/simd/bitset_kernels.hpp"

#include <bit>

namespace ramsey::simd::scalar {

namespace {

std::size_t popcount_words(const Word* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount_words(const Word* a, const Word* b, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into_words(Word* dst, const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

bool any_words(const Word* a, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
        if (a[i] != 0) return true;
    }
    return false;
}

}  // namespace

const KernelTable& table() {
    static const KernelTable t{"scalar", popcount_words, and_popcount_words, and_into_words, any_words};
    return t;
}

}  // namespace ramsey::simd::scalar
