#include <chrono>
#include <functional>
#include <ostream>
#include <random>

#include "ramsey/builders.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/simd/bitset_kernels.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

namespace {

constexpr std::string_view kFixture1x1 =
    "6\n0 2 R\n0 3 B\n0 4 B\n0 5 R\n1 2 B\n1 3 B\n1 4 B\n1 5 R\n2 4 R\n2 5 B\n3 4 R\n3 5 B\n4 5 B\n";
constexpr std::string_view kFixture2x3 =
    "6\n1 2 R\n0 3 R\n0 4 R\n0 5 R\n1 3 B\n1 4 B\n1 5 B\n2 3 B\n2 4 B\n2 5 B\n";

using IndependencePredicate = std::function<bool(const BichromaticGraph&, const Pair&, const Pair&)>;

BichromaticGraph random_graph(std::mt19937_64& rng, int n, double unbuilt_share) {
    BichromaticGraph g(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (u(rng) < unbuilt_share) continue;
            g.build({a, b}, u(rng) < 0.5 ? Color::Red : Color::Blue);
        }
    }
    return g;
}

// Independent (p, q) whose four endpoints can still end up spanning one
// monochromatic K4 under some completion of the pairs among them.
std::size_t independence_violations(std::size_t graphs, std::uint64_t seed, const IndependencePredicate& independent) {
    std::mt19937_64 rng(seed);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < graphs; ++i) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const auto g = random_graph(rng, n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
        const auto unbuilt = g.unbuilt_pairs();
        for (std::size_t a = 0; a < unbuilt.size(); ++a) {
            for (std::size_t b = a + 1; b < unbuilt.size(); ++b) {
                const Pair p = unbuilt[a];
                const Pair q = unbuilt[b];
                if (!independent(g, p, q)) continue;
                const Vertex vs[4] = {p.u, p.v, q.u, q.v};
                bool can_red = true;
                bool can_blue = true;
                for (int x = 0; x < 4; ++x) {
                    for (int y = x + 1; y < 4; ++y) {
                        if (vs[x] == vs[y]) continue;
                        const auto s = g.state(vs[x], vs[y]);
                        can_red = can_red && s != PairState::Blue;
                        can_blue = can_blue && s != PairState::Red;
                    }
                }
                if (can_red || can_blue) ++violations;
            }
        }
    }
    return violations;
}

struct Suite {
    std::ostream& out;
    bool ok = true;

    void item(const std::string& name, bool pass, const std::string& detail) {
        out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
        ok = ok && pass;
    }
};

void check_pairwise_fixtures(Suite& suite) {
    const GameConfig cfg{3, 3, 6};
    struct Case {
        std::string_view text;
        std::vector<Pair> p;
        std::vector<Pair> q;
    };
    const std::vector<Case> cases = {
        {kFixture1x1, {{0, 1}}, {{2, 3}}},
        {kFixture2x3, {{0, 1}, {0, 2}}, {{3, 4}, {3, 5}, {4, 5}}},
    };
    for (const auto& c : cases) {
        const auto g = BichromaticGraph::parse(c.text);
        bool cross = true;
        for (const auto& p : c.p) {
            for (const auto& q : c.q) cross = cross && are_independent(g, p, q);
        }
        const auto saved = savings_of(g, cfg);
        const auto brute = brute_value(g, cfg);
        const auto bound = std::min(c.p.size(), c.q.size());
        const bool agrees = brute && saved &&
                            *saved == static_cast<std::int64_t>(cfg.total_pairs() - g.built_count()) - *brute;
        const std::string name = "pairwise-fixture-" + std::to_string(c.p.size()) + "x" + std::to_string(c.q.size());
        suite.item(name, cross && agrees && saved && *saved >= static_cast<std::int64_t>(bound),
                   "savings=" + (saved ? std::to_string(*saved) : std::string("none")) +
                       " min(s,t)=" + std::to_string(bound));
    }
}

void check_oracle(Suite& suite, bool quick) {
    const int max_n = quick ? 4 : 5;
    const int positions = quick ? 20 : 100;
    std::size_t mismatches = 0;
    std::size_t checked = 0;
    std::mt19937_64 rng(0x5eed);
    for (int m = 2; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
            for (int N = 2; N <= max_n; ++N) {
                const GameConfig cfg{m, n, N};
                ExactSolver solver(cfg);
                for (int i = 0; i <= positions; ++i) {
                    const auto g = i == 0 ? BichromaticGraph(N) : random_graph(rng, N, 0.6);
                    ++checked;
                    if (solver.value(g) != brute_value(g, cfg)) ++mismatches;
                }
            }
        }
    }
    suite.item("solver-oracle", mismatches == 0,
               std::to_string(checked) + " positions, " + std::to_string(mismatches) + " mismatches");
}

void check_structures(Suite& suite, bool quick) {
    std::mt19937_64 rng(0xfeed);
    const int rounds = quick ? 100 : 1000;
    std::size_t bad_incidence = 0;
    std::size_t bad_swap = 0;
    std::size_t bad_reduced = 0;
    std::size_t bad_incremental = 0;
    for (int r = 0; r < rounds; ++r) {
        const int n0 = 2 + static_cast<int>(rng() % 7);
        BichromaticGraph g(2 * n0);
        VertexSet left;
        VertexSet right;
        for (Vertex v = 0; v < n0; ++v) {
            left.push_back(v);
            right.push_back(n0 + v);
        }
        for (const Vertex u : left) {
            for (const Vertex v : right) g.build({u, v}, rng() % 2 == 0 ? Color::Red : Color::Blue);
        }
        std::size_t expected = 0;
        for (const Vertex u : left) {
            std::size_t red = 0;
            for (const Vertex v : right) red += g.state(u, v) == PairState::Red ? 1 : 0;
            expected += red * (right.size() - red);
        }
        const auto hl = incidence_graph(g, left, right, IncidenceSide::Left).edge_count();
        if (hl != expected) ++bad_incidence;
        if (incidence_graph(g.color_swapped(), left, right, IncidenceSide::Left).edge_count() != hl) ++bad_swap;

        const auto layout = PartitionLayout::contiguous(2 * n0, 2, n0);
        const Rational eps(1 + static_cast<std::int64_t>(rng() % 4), 10);
        const auto reduced = reduced_graph(g, layout, eps);
        if (reduced.label(0, 1) != threshold_label(red_density(g, left, right), eps)) ++bad_reduced;

        const auto h = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.3);
        for (const auto& e : h.built_edges()) {
            for (int k = 2; k <= 4; ++k) {
                const auto fast = incremental_clique_check(h, e.pair, e.color, k);
                const auto slow = largest_clique_through(h, e.pair, e.color) >= k;
                if (fast.has_value() != slow) ++bad_incremental;
            }
        }
    }
    suite.item("incidence-identity", bad_incidence == 0, std::to_string(rounds) + " complete bipartite graphs");
    suite.item("incidence-color-swap", bad_swap == 0, std::to_string(rounds) + " graphs");
    suite.item("reduced-threshold", bad_reduced == 0, std::to_string(rounds) + " layouts");
    suite.item("incremental-clique", bad_incremental == 0, std::to_string(bad_incremental) + " disagreements");
}

void check_simd(Suite& suite) {
    std::mt19937_64 rng(7);
    std::size_t bad = 0;
    const auto& ref = simd::scalar::table();
    const auto tables = simd::available();
    for (int r = 0; r < 200; ++r) {
        const std::size_t words = rng() % 40;
        std::vector<simd::Word> a(words);
        std::vector<simd::Word> b(words);
        for (auto& w : a) w = rng() & rng();
        for (auto& w : b) w = rng();
        for (const auto* t : tables) {
            std::vector<simd::Word> x(words);
            std::vector<simd::Word> y(words);
            ref.and_into(x.data(), a.data(), b.data(), words);
            t->and_into(y.data(), a.data(), b.data(), words);
            if (t->popcount(a.data(), words) != ref.popcount(a.data(), words) ||
                t->and_popcount(a.data(), b.data(), words) != ref.and_popcount(a.data(), b.data(), words) ||
                t->any(x.data(), words) != ref.any(x.data(), words) || x != y) {
                ++bad;
            }
        }
    }
    std::string names;
    for (const auto* t : tables) names += (names.empty() ? "" : ",") + std::string(t->name);
    suite.item("simd-equivalence", bad == 0, "tables " + names);
}

}  // namespace

bool verify_all(bool quick, std::ostream& out) {
    Suite suite{out};
    check_pairwise_fixtures(suite);

    const std::size_t graphs = quick ? 2000 : 10000;
    const auto violations = independence_violations(graphs, 11, are_independent);
    suite.item("independence-exclusion", violations == 0,
               std::to_string(graphs) + " graphs, " + std::to_string(violations) + " violations");

    // A mutant that forgets the blue cross edge must be caught by the same fuzz.
    const auto mutant = [](const BichromaticGraph& g, const Pair& p, const Pair& q) {
        if (p.shares_vertex(q) || g.is_built(p.u, p.v) || g.is_built(q.u, q.v)) return false;
        for (const Vertex a : {p.u, p.v}) {
            for (const Vertex b : {q.u, q.v}) {
                if (g.state(a, b) == PairState::Red) return true;
            }
        }
        return false;
    };
    const auto caught = independence_violations(graphs, 11, mutant);
    suite.item("mutation-smoke", caught > 0, "mutant flagged on " + std::to_string(caught) + " pair combinations");

    check_oracle(suite, quick);
    check_structures(suite, quick);
    check_simd(suite);

    if (!quick) {
        const GameConfig cfg{3, 3, 6};
        const RetrogradeTable table(cfg);
        const auto retro = table.value(BichromaticGraph(6));
        ExactSolver solver(cfg);
        const auto minimax = solver.value(BichromaticGraph(6));
        suite.item("retrograde-3-3-6", retro && retro == minimax && *retro >= 3 && *retro <= 15,
                   "value=" + (retro ? std::to_string(*retro) : std::string("none")));
    }
    return suite.ok;
}

}  // namespace ramsey
