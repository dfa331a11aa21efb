#pragma once

// Word-array kernels behind every neighborhood intersection in the project.
// Each kernel has a portable scalar reference and optional vector variants;
// the active set is picked once at startup from CPU features and can be
// pinned with the RAMSEY_SIMD environment variable (scalar|avx2|neon).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ramsey::simd {

using Word = std::uint64_t;

struct KernelTable {
    std::string_view name;
    std::size_t (*popcount)(const Word* a, std::size_t words);
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
    bool (*any)(const Word* a, std::size_t words);
};

namespace scalar {
const KernelTable& table();
}
namespace avx2 {
// Only callable when the CPU reports AVX2; see available().
const KernelTable& table();
}
namespace neon {
const KernelTable& table();
}

// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available();

const KernelTable& active();

// Pins the active table by name; returns false if that variant is unavailable.
bool select(std::string_view name);

inline std::size_t popcount(std::span<const Word> a) { return active().popcount(a.data(), a.size()); }

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
    return active().and_popcount(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    active().and_into(dst.data(), a.data(), b.data(), dst.size());
}

inline bool any(std::span<const Word> a) { return active().any(a.data(), a.size()); }

}  // namespace ramsey::simd
