#include "ramsey/simd/bitset_kernels.hpp"

#include <bit>

#if defined(__aarch64__)
#include <arm_neon.h>

namespace ramsey::simd::neon {

namespace {

std::size_t popcount_words(const Word* a, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount_words(const Word* a, const Word* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
    }
    std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into_words(Word* dst, const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

bool any_words(const Word* a, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t v = vld1q_u64(a + i);
        if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return true;
    }
    for (; i < words; ++i) {
        if (a[i] != 0) return true;
    }
    return false;
}

}  // namespace

const KernelTable& table() {
    static const KernelTable t{"neon", popcount_words, and_popcount_words, and_into_words, any_words};
    return t;
}

}  // namespace ramsey::simd::neon

#else

namespace ramsey::simd::neon {
const KernelTable& table() { return scalar::table(); }
}  // namespace ramsey::simd::neon

#endif
