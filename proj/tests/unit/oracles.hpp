#pragma once

// Slow reference implementations used only by the tests.

#include <optional>
#include <random>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey::testing {

inline BichromaticGraph random_graph(std::mt19937_64& rng, int n, double unbuilt_share) {
    BichromaticGraph g(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (u(rng) >= unbuilt_share) g.build(a, b, u(rng) < 0.5 ? Color::Red : Color::Blue);
        }
    }
    return g;
}

inline bool is_mono_clique(const BichromaticGraph& g, const VertexSet& s, Color c) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.state(s[i], s[j]) != built_state(c)) return false;
        }
    }
    return true;
}

// Every k-subset in lexicographic order; the first monochromatic one wins.
inline std::optional<VertexSet> subset_clique(const BichromaticGraph& g, Color c, int k,
                                              std::optional<Pair> through = std::nullopt) {
    const int n = g.vertex_count();
    if (k > n) return std::nullopt;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        if (through && (!(mask >> through->u & 1U) || !(mask >> through->v & 1U))) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1U) s.push_back(v);
        }
        if (is_mono_clique(g, s, c)) return s;
    }
    return std::nullopt;
}

// Plain minimax over the whole tree, no memo: tiny positions only.
inline int naive_value(BichromaticGraph& g, int m, int n, int depth_cap = 64) {
    for (const Color c : {Color::Red, Color::Blue}) {
        if (subset_clique(g, c, c == Color::Red ? m : n)) return 0;
    }
    int best = depth_cap;
    for (const auto& p : g.unbuilt_pairs()) {
        int worst = 0;
        for (const Color c : {Color::Red, Color::Blue}) {
            g.set_state(p.u, p.v, built_state(c));
            worst = std::max(worst, naive_value(g, m, n, depth_cap));
            g.set_state(p.u, p.v, PairState::Unbuilt);
        }
        best = std::min(best, worst + 1);
    }
    return best;
}

}  // namespace ramsey::testing
