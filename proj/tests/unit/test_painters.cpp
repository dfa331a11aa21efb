#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "ramsey/builders.hpp"
#include "ramsey/painters.hpp"
#include "ramsey/solver.hpp"

using namespace ramsey;

TEST_CASE("random painter is reproducible and fair") {
    const GameState s({3, 3, 6});
    auto a = random_painter(7);
    auto b = random_painter(7);
    auto c = random_painter(8);
    std::size_t red = 0;
    bool differs = false;
    for (int i = 0; i < 10000; ++i) {
        const auto x = a->choose(s, {0, 1});
        CHECK(x == b->choose(s, {0, 1}));
        differs = differs || x != c->choose(s, {0, 1});
        red += x == Color::Red ? 1 : 0;
    }
    CHECK(differs);
    CHECK(red >= 4500);
    CHECK(red <= 5500);
}

TEST_CASE("greedy painter") {
    const GameConfig cfg{3, 3, 6};
    auto greedy = greedy_minclique_painter(cfg);
    CHECK(greedy->choose(GameState(cfg), {0, 1}) == Color::Red);

    BichromaticGraph g(6);
    g.build(0, 2, Color::Red);
    g.build(1, 2, Color::Red);
    CHECK(greedy->choose(GameState(cfg, g), {0, 1}) == Color::Blue);

    // Equal clique sizes: the rarer color.
    BichromaticGraph h(6);
    h.build(2, 3, Color::Red);
    CHECK(greedy->choose(GameState(cfg, h), {0, 1}) == Color::Blue);
}

TEST_CASE("greedy painter survives naive (3,3;6) at least 8 moves") {
    const GameConfig cfg{3, 3, 6};
    auto builder = naive_builder(cfg);
    auto painter = greedy_minclique_painter(cfg);
    const auto r = play(cfg, *builder, *painter);
    CHECK(r.report.moves_used >= 8);
    CHECK(static_cast<int>(r.report.moves_used) >= *solve_from(BichromaticGraph(6), cfg).value);
}

TEST_CASE("balanced painter keeps colors within one") {
    auto p = balanced_painter();
    BichromaticGraph g(6);
    g.build(0, 1, Color::Red);
    g.build(0, 2, Color::Red);
    g.build(0, 3, Color::Blue);
    CHECK(p->choose(GameState({3, 3, 6}, g), {4, 5}) == Color::Blue);
    CHECK(p->choose(GameState({3, 3, 6}), {4, 5}) == Color::Red);

    const GameConfig cfg{4, 4, 14};
    GameState s(cfg);
    auto builder = naive_builder(cfg);
    while (!s.finished()) {
        const auto move = builder->next_move(s);
        s.apply(*move, p->choose(s, *move));
        const auto r = static_cast<long>(s.graph().red_count());
        const auto b = static_cast<long>(s.graph().blue_count());
        CHECK(std::abs(r - b) <= 1);
    }
}

TEST_CASE("minimax painter") {
    auto tiny = minimax_painter({2, 2, 2});
    const auto c = tiny->choose(GameState({2, 2, 2}), {0, 1});
    CHECK((c == Color::Red || c == Color::Blue));

    const GameConfig cfg{2, 3, 3};
    auto p = minimax_painter(cfg);
    GameState s(cfg);
    CHECK(p->choose(s, {0, 1}) == Color::Blue);
    s.apply({0, 1}, Color::Blue);
    CHECK(p->choose(s, {1, 2}) == Color::Blue);

    CHECK_THROWS_AS(minimax_painter({3, 3, 7}), SolverError);
}

TEST_CASE("minimax painter never concedes faster than the solver value") {
    // Exhaustive builder strategies against minimax on tiny games.
    for (int m = 2; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
            for (int N = std::max(m, n); N <= 5; ++N) {
                const GameConfig cfg{m, n, N};
                ExactSolver solver(cfg);
                auto painter = minimax_painter(cfg);
                // Depth-first over every builder move sequence (all orders), small enough here.
                std::function<void(GameState&)> walk = [&](GameState& s) {
                    if (s.finished()) return;
                    const auto v = solver.value(s.graph());
                    for (const auto& p : s.graph().unbuilt_pairs()) {
                        GameState next = s;
                        next.apply(p, painter->choose(s, p));
                        const auto after = solver.value(next.graph());
                        // Painter's answer keeps at least v - 1 moves in hand.
                        if (v && after) CHECK(*after >= *v - 1);
                        if (!v) CHECK_FALSE(after);
                    }
                };
                GameState root(cfg);
                walk(root);
                for (const auto& p : root.graph().unbuilt_pairs()) {
                    GameState next = root;
                    next.apply(p, painter->choose(root, p));
                    walk(next);
                }
            }
        }
    }
}

TEST_CASE("replay painter reproduces and detects divergence") {
    const GameConfig cfg{3, 3, 6};
    auto builder = naive_builder(cfg);
    auto random = random_painter(5);
    const auto original = play(cfg, *builder, *random).transcript;

    auto builder2 = naive_builder(cfg);
    auto replay = replay_painter(original);
    const auto again = play(cfg, *builder2, *replay).transcript;
    CHECK(again.serialize() == original.serialize());

    auto replay2 = replay_painter(original);
    const GameState s(cfg);
    CHECK_THROWS_AS(replay2->choose(s, {4, 5}), GameError);
}

TEST_CASE("painter specs") {
    const GameConfig cfg{3, 3, 6};
    CHECK(make_painter("random:12", cfg)->name() == "random:12");
    CHECK(make_painter("random", cfg, 99)->name() == "random:99");
    CHECK(make_painter("greedy", cfg)->name() == "greedy");
    CHECK(make_painter("balanced", cfg)->name() == "balanced");
    CHECK(make_painter("minimax", cfg)->name() == "minimax");
    CHECK(make_painter("alternating", cfg)->name() == "alternating");
    CHECK(make_painter("red", cfg)->name() == "red");
    CHECK_THROWS_AS(make_painter("random:x", cfg), StrategyError);
    CHECK_THROWS_AS(make_painter("remote:abc", cfg), StrategyError);
    CHECK_THROWS_AS(make_painter("nope", cfg), StrategyError);
    CHECK_THROWS_AS(make_painter("replay:/no/such/file", cfg), StrategyError);

    const auto path = std::filesystem::temp_directory_path() / "ramsey_replay_spec.txt";
    auto builder = naive_builder(cfg);
    auto random = random_painter(5);
    std::ofstream(path) << play(cfg, *builder, *random).transcript.serialize();
    CHECK(make_painter("replay:" + path.string(), cfg)->name() == "replay");
    CHECK_THROWS_AS(make_painter("replay:" + path.string(), GameConfig{3, 3, 7}), GameError);
    std::filesystem::remove(path);
}

TEST_CASE("every pool painter answers every legal query") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 10000; ++i) {
        const GameConfig cfg{3, 3, 4 + static_cast<int>(rng() % 3)};
        const auto g = testing::random_graph(rng, cfg.N, 0.5);
        GameState s(cfg, g);
        const auto un = g.unbuilt_pairs();
        if (un.empty()) continue;
        const auto p = un[rng() % un.size()];
        for (const auto& spec : painter_pool()) {
            const auto c = make_painter(spec, cfg, i)->choose(s, p);
            CHECK((c == Color::Red || c == Color::Blue));
        }
    }
}
