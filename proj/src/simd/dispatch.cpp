#include "ramsey/simd/bitset_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ramsey::simd {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool cpu_has_neon() {
#if defined(__aarch64__)
    return true;
#else
    return false;
#endif
}

const KernelTable* pick_default() {
    const auto tables = available();
    if (const char* forced = std::getenv("RAMSEY_SIMD")) {
        for (const auto* t : tables) {
            if (t->name == forced) return t;
        }
    }
    return tables.back();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> current{pick_default()};
    return current;
}

}  // namespace

std::vector<const KernelTable*> available() {
    std::vector<const KernelTable*> out{&scalar::table()};
    if (cpu_has_avx2()) out.push_back(&avx2::table());
    if (cpu_has_neon()) out.push_back(&neon::table());
    return out;
}

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
    for (const auto* t : available()) {
        if (t->name == name) {
            slot().store(t, std::memory_order_relaxed);
            return true;
        }
    }
    return false;
}

}  // namespace ramsey::simd
