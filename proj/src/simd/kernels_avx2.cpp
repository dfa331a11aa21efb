// Compiled with -mavx2; nothing here may run before dispatch confirms AVX2.
#include "ramsey/simd/bitset_kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace ramsey::simd::avx2 {

namespace {

// Nibble-lookup popcount of four 64-bit lanes, summed per lane.
inline __m256i lane_popcount(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount_words(const Word* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, lane_popcount(v));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount_words(const Word* a, const Word* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, lane_popcount(_mm256_and_si256(va, vb)));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into_words(Word* dst, const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

bool any_words(const Word* a, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < words; ++i) {
        if (a[i] != 0) return true;
    }
    return false;
}

}  // namespace

const KernelTable& table() {
    static const KernelTable t{"avx2", popcount_words, and_popcount_words, and_into_words, any_words};
    return t;
}

}  // namespace ramsey::simd::avx2

#else

namespace ramsey::simd::avx2 {
const KernelTable& table() { return scalar::table(); }
}  // namespace ramsey::simd::avx2

#endif
