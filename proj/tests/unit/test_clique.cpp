#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ramsey/clique.hpp"

using namespace ramsey;

TEST_CASE("clique on a red triangle") {
    BichromaticGraph g(3);
    g.build(0, 1, Color::Red);
    g.build(1, 2, Color::Red);
    g.build(0, 2, Color::Red);
    CHECK(find_mono_clique(g, Color::Red, 3) == VertexSet{0, 1, 2});
    CHECK_FALSE(find_mono_clique(g, Color::Blue, 2));
    CHECK(find_mono_clique(g, Color::Blue, 1).has_value());
    CHECK_FALSE(find_mono_clique(g, Color::Red, 4));
    CHECK_THROWS(find_mono_clique(g, Color::Red, 0));
}

TEST_CASE("incremental check closes a triangle only in its own color") {
    BichromaticGraph g(3);
    g.build(0, 1, Color::Red);
    g.build(1, 2, Color::Red);
    auto red = g;
    red.build(0, 2, Color::Red);
    CHECK(incremental_clique_check(red, {0, 2}, Color::Red, 3) == VertexSet{0, 1, 2});
    auto blue = g;
    blue.build(0, 2, Color::Blue);
    CHECK_FALSE(incremental_clique_check(blue, {0, 2}, Color::Blue, 3));
    CHECK_FALSE(incremental_clique_check(blue, {0, 2}, Color::Red, 3));
}

TEST_CASE("find_mono_clique agrees with subset enumeration") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto g = testing::random_graph(rng, n, 0.25);
        for (const Color c : {Color::Red, Color::Blue}) {
            for (int k = 1; k <= n + 1; ++k) {
                const auto fast = find_mono_clique(g, c, k);
                const auto slow = testing::subset_clique(g, c, k);
                CHECK(fast.has_value() == slow.has_value());
                if (fast) {
                    CHECK(fast->size() == static_cast<std::size_t>(k));
                    CHECK(testing::is_mono_clique(g, *fast, c));
                }
            }
        }
    }
}

TEST_CASE("incremental check agrees with cliques through the last edge") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto g = testing::random_graph(rng, n, 0.3);
        for (const auto& e : g.built_edges()) {
            for (int k = 2; k <= 5; ++k) {
                const auto fast = incremental_clique_check(g, e.pair, e.color, k);
                const auto slow = testing::subset_clique(g, e.color, k, e.pair);
                CHECK(fast.has_value() == slow.has_value());
                if (fast) {
                    CHECK(testing::is_mono_clique(g, *fast, e.color));
                    CHECK(std::find(fast->begin(), fast->end(), e.pair.u) != fast->end());
                    CHECK(std::find(fast->begin(), fast->end(), e.pair.v) != fast->end());
                }
            }
        }
    }
}

TEST_CASE("maximum cliques are maximum") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const auto g = testing::random_graph(rng, n, 0.2);
        for (const Color c : {Color::Red, Color::Blue}) {
            const auto best = max_mono_clique(g, c);
            CHECK(testing::is_mono_clique(g, best, c));
            CHECK_FALSE(testing::subset_clique(g, c, static_cast<int>(best.size()) + 1));
        }
        for (const auto& p : g.unbuilt_pairs()) {
            for (const Color c : {Color::Red, Color::Blue}) {
                auto h = g;
                h.build(p, c);
                int expected = 2;
                while (testing::subset_clique(h, c, expected + 1, p)) ++expected;
                CHECK(largest_clique_through(g, p, c) == expected);
            }
        }
    }
}

TEST_CASE("clique search across word boundaries") {
    BichromaticGraph g(150);
    const VertexSet target{3, 63, 64, 100, 149};
    for (std::size_t i = 0; i < target.size(); ++i) {
        for (std::size_t j = i + 1; j < target.size(); ++j) g.build(target[i], target[j], Color::Blue);
    }
    CHECK(find_mono_clique(g, Color::Blue, 5) == target);
    CHECK(max_mono_clique(g, Color::Blue) == target);
    CHECK(incremental_clique_check(g, {64, 149}, Color::Blue, 5) == target);
}
