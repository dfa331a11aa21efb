// Acceptance gate: one PASS/FAIL line per criterion. Reference values come
// from small oracles defined here, not from the library.

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "ramsey/builders.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/game.hpp"
#include "ramsey/painters.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/structures.hpp"

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and budgets.
constexpr double kSmallValueSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kRetrogradeSeconds = 600.0;
constexpr long kRetrogradeMaxRssKb = 512L * 1024;
constexpr int kRandomPositions = 100;
constexpr int kIndependenceGraphs = 10000;
constexpr int kSampledCompletions = 32;
constexpr int kExhaustiveUnbuiltLimit = 12;
constexpr int kRandomPainterSeeds = 1000;
constexpr int kDensityInstances = 200;
constexpr int kKstSearches = 1000;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

long max_rss_kb() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss;
}

bool all_ok = true;

void report(bool ok, const std::string& name, const std::string& detail) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

// ---------------------------------------------------------------------------
// Oracle game values: memoized minimax over base-3 pair-state codes, no
// symmetry reduction, no pruning.

class MemoOracle {
public:
    static constexpr int kUnwinnable = 1000;

    MemoOracle(int m, int n, int N) : m_(m), n_(n), N_(N) {
        for (int u = 0; u < N; ++u) {
            for (int v = u + 1; v < N; ++v) pairs_.push_back({u, v});
        }
        pow3_.assign(pairs_.size() + 1, 1);
        for (std::size_t i = 1; i <= pairs_.size(); ++i) pow3_[i] = pow3_[i - 1] * 3;
    }

    int value(const BichromaticGraph& g) {
        std::vector<int> s(pairs_.size());
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            const auto st = g.state(pairs_[i].u, pairs_[i].v);
            s[i] = st == PairState::Unbuilt ? 0 : st == PairState::Red ? 1 : 2;
        }
        return eval(s);
    }

private:
    bool has_clique(const std::vector<int>& s, int color, int k) const {
        for (std::uint32_t mask = 0; mask < (1U << N_); ++mask) {
            if (std::popcount(mask) != k) continue;
            bool ok = true;
            for (std::size_t i = 0; i < pairs_.size() && ok; ++i) {
                if ((mask >> pairs_[i].u & 1U) && (mask >> pairs_[i].v & 1U)) ok = s[i] == color;
            }
            if (ok) return true;
        }
        return false;
    }

    int eval(std::vector<int>& s) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < s.size(); ++i) code += static_cast<std::uint64_t>(s[i]) * pow3_[i];
        if (const auto it = memo_.find(code); it != memo_.end()) return it->second;
        int result = kUnwinnable;
        if (has_clique(s, 1, m_) || has_clique(s, 2, n_)) {
            result = 0;
        } else {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] != 0) continue;
                int worst = 0;
                for (int c = 1; c <= 2; ++c) {
                    s[i] = c;
                    worst = std::max(worst, eval(s));
                    s[i] = 0;
                }
                if (worst < kUnwinnable) result = std::min(result, worst + 1);
            }
        }
        memo_.emplace(code, result);
        return result;
    }

    int m_;
    int n_;
    int N_;
    std::vector<Pair> pairs_;
    std::vector<std::uint64_t> pow3_;
    std::map<std::uint64_t, int> memo_;
};

std::optional<int> as_optional(int v) {
    return v >= MemoOracle::kUnwinnable ? std::nullopt : std::optional<int>(v);
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

BichromaticGraph random_position(std::mt19937_64& rng, int N, double unbuilt_share) {
    BichromaticGraph g(N);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int a = 0; a < N; ++a) {
        for (int b = a + 1; b < N; ++b) {
            if (u(rng) >= unbuilt_share) g.build(a, b, u(rng) < 0.5 ? Color::Red : Color::Blue);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------

void exact_small_values() {
    // (2,2): one edge, whatever its color. (2,n), n >= 3: Painter answering
    // blue forever forces Builder to build a whole blue K_n, and Builder can
    // always build one on any n vertices, so the value is C(n,2).
    struct Case {
        int m, n, N, expected;
    };
    std::vector<Case> cases;
    for (int N = 2; N <= 6; ++N) cases.push_back({2, 2, N, 1});
    for (int N = 3; N <= kMaxSolverVertices; ++N) cases.push_back({2, 3, N, 3});
    for (int N = 4; N <= kMaxSolverVertices; ++N) cases.push_back({2, 4, N, 6});
    bool ok = true;
    double slowest = 0;
    std::string bad;
    for (const auto& c : cases) {
        const auto start = Clock::now();
        const auto r = solve_from(BichromaticGraph(c.N), {c.m, c.n, c.N});
        const double t = seconds_since(start);
        slowest = std::max(slowest, t);
        if (r.value != c.expected || t > kSmallValueSeconds) {
            ok = false;
            bad += " (" + std::to_string(c.m) + "," + std::to_string(c.n) + ";" + std::to_string(c.N) +
                   ")=" + show(r.value);
        }
    }
    std::ostringstream d;
    d << cases.size() << " cases, slowest " << slowest << " s (limit " << kSmallValueSeconds << " s)" << bad;
    report(ok, "exact-small-values", d.str());
}

void oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240611);
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::string first_bad;
    for (int m = 2; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
            for (int N = std::max(m, n); N <= 5; ++N) {
                const GameConfig cfg{m, n, N};
                MemoOracle oracle(m, n, N);
                ExactSolver solver(cfg);
                std::vector<BichromaticGraph> positions{BichromaticGraph(N)};
                for (int i = 0; i < kRandomPositions; ++i) {
                    positions.push_back(random_position(rng, N, std::uniform_real_distribution<double>(0.2, 1.0)(rng)));
                }
                for (const auto& g : positions) {
                    const auto expected = as_optional(oracle.value(g));
                    const auto got = solver.value(g);
                    const auto brute = brute_value(g, cfg);
                    ++checked;
                    if (got != expected || brute != expected) {
                        ++mismatches;
                        if (first_bad.empty()) {
                            first_bad = " first mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ";" +
                                        std::to_string(N) + "): solver " + show(got) + ", brute " + show(brute) +
                                        ", oracle " + show(expected);
                        }
                    }
                }
            }
        }
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << checked << " positions, " << mismatches << " mismatches, " << t << " s (limit " << kOracleSeconds << " s)"
      << first_bad;
    report(mismatches == 0 && t <= kOracleSeconds, "oracle-equivalence", d.str());
}

// Smallest N with every 2-coloring of K_N containing a monochromatic triangle.
int ramsey_3_3() {
    for (int N = 3;; ++N) {
        const int P = N * (N - 1) / 2;
        bool forced = true;
        for (std::uint32_t coloring = 0; coloring < (1U << P) && forced; ++coloring) {
            std::vector<std::vector<int>> c(N, std::vector<int>(N));
            int bit = 0;
            for (int a = 0; a < N; ++a) {
                for (int b = a + 1; b < N; ++b) c[a][b] = c[b][a] = (coloring >> bit++) & 1U;
            }
            bool mono = false;
            for (int a = 0; a < N && !mono; ++a) {
                for (int b = a + 1; b < N && !mono; ++b) {
                    for (int x = b + 1; x < N && !mono; ++x) mono = c[a][b] == c[a][x] && c[a][b] == c[b][x];
                }
            }
            forced = mono;
        }
        if (forced) return N;
    }
}

void retrograde_ground_truth() {
    const GameConfig cfg{3, 3, 6};
    const auto start = Clock::now();
    const RetrogradeTable table(cfg);
    const auto retro = table.value(BichromaticGraph(6));
    const double t = seconds_since(start);
    const long rss = max_rss_kb();
    const auto minimax = solve_from(BichromaticGraph(6), cfg).value;
    const int lower = (ramsey_3_3() + 1) / 2;
    const int upper = 15;
    const bool ok = retro && retro == minimax && *retro >= lower && *retro <= upper && t <= kRetrogradeSeconds &&
                    rss <= kRetrogradeMaxRssKb;
    std::ostringstream d;
    d << "table " << table.size() << " states, value " << show(retro) << ", minimax " << show(minimax) << ", bounds ["
      << lower << "," << upper << "], " << t << " s, max rss " << rss / 1024 << " MB";
    report(ok, "retrograde-3-3-6", d.str());
}

bool independent_oracle(const BichromaticGraph& g, const Pair& p, const Pair& q) {
    const std::vector<int> ends{p.u, p.v, q.u, q.v};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (ends[i] == ends[j]) return false;
        }
    }
    if (g.is_built(p.u, p.v) || g.is_built(q.u, q.v)) return false;
    int red = 0;
    int blue = 0;
    for (const int a : {p.u, p.v}) {
        for (const int b : {q.u, q.v}) {
            red += g.state(a, b) == PairState::Red;
            blue += g.state(a, b) == PairState::Blue;
        }
    }
    return red > 0 && blue > 0;
}

void pairwise_fixtures(const std::filesystem::path& dir) {
    struct Fixture {
        std::string file;
        std::vector<Pair> p;
        std::vector<Pair> q;
    };
    const std::vector<Fixture> fixtures{
        {"pairwise_1x1.graph", {{0, 1}}, {{2, 3}}},
        {"pairwise_2x3.graph", {{0, 1}, {0, 2}}, {{3, 4}, {3, 5}, {4, 5}}},
    };
    const GameConfig cfg{3, 3, 6};
    for (const auto& f : fixtures) {
        std::ifstream in(dir / f.file);
        const std::string text{std::istreambuf_iterator<char>(in), {}};
        const auto g = BichromaticGraph::parse(text);
        bool families_ok = g.unbuilt_count() == f.p.size() + f.q.size();
        for (const auto& p : f.p) {
            for (const auto& q : f.q) families_ok = families_ok && independent_oracle(g, p, q) && are_independent(g, p, q);
        }
        const auto s = savings_of(g, cfg);
        const auto brute = brute_value(g, cfg);
        const auto oracle = as_optional(MemoOracle(3, 3, 6).value(g));
        const auto min_st = std::min(f.p.size(), f.q.size());
        const bool ok = families_ok && s && brute && brute == oracle &&
                        static_cast<std::int64_t>(g.unbuilt_count()) - *brute == *s &&
                        *s >= static_cast<std::int64_t>(min_st);
        std::ostringstream d;
        d << f.file << ": |P|=" << f.p.size() << " |Q|=" << f.q.size() << ", cross-independent "
          << (families_ok ? "yes" : "no") << ", value " << show(brute) << ", savings "
          << (s ? std::to_string(*s) : "none") << " >= " << min_st;
        report(ok, "pairwise-fixture-" + std::to_string(f.p.size()) + "x" + std::to_string(f.q.size()), d.str());
    }
}

bool endpoints_mono_k4(const BichromaticGraph& g, const std::vector<int>& ends) {
    std::optional<PairState> color;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const auto s = g.state(ends[i], ends[j]);
            if (s == PairState::Unbuilt || (color && *color != s)) return false;
            color = s;
        }
    }
    return true;
}

void independence_fuzz() {
    std::mt19937_64 rng(9001);
    std::size_t independent_pairs = 0;
    std::size_t completions = 0;
    std::size_t exhaustive_graphs = 0;
    std::size_t violations = 0;
    std::size_t predicate_disagreements = 0;
    for (int round = 0; round < kIndependenceGraphs; ++round) {
        const int N = 4 + static_cast<int>(rng() % 9);
        const double share = N <= 8 ? std::uniform_real_distribution<double>(0.1, 0.45)(rng)
                                    : std::uniform_real_distribution<double>(0.1, 0.7)(rng);
        const auto g = random_position(rng, N, share);
        const auto unbuilt = g.unbuilt_pairs();
        std::vector<std::pair<Pair, Pair>> found;
        for (std::size_t i = 0; i < unbuilt.size(); ++i) {
            for (std::size_t j = i + 1; j < unbuilt.size(); ++j) {
                const bool lib = are_independent(g, unbuilt[i], unbuilt[j]);
                if (lib != independent_oracle(g, unbuilt[i], unbuilt[j])) ++predicate_disagreements;
                if (lib) found.emplace_back(unbuilt[i], unbuilt[j]);
            }
        }
        if (found.empty()) continue;
        independent_pairs += found.size();
        const auto check = [&](const BichromaticGraph& full) {
            ++completions;
            for (const auto& [p, q] : found) {
                if (endpoints_mono_k4(full, {p.u, p.v, q.u, q.v})) ++violations;
            }
        };
        if (N <= 8 && static_cast<int>(unbuilt.size()) <= kExhaustiveUnbuiltLimit) {
            ++exhaustive_graphs;
            for (std::uint32_t bits = 0; bits < (1U << unbuilt.size()); ++bits) {
                BichromaticGraph full = g;
                for (std::size_t k = 0; k < unbuilt.size(); ++k) {
                    full.build(unbuilt[k], (bits >> k & 1U) ? Color::Blue : Color::Red);
                }
                check(full);
            }
        } else {
            for (int k = 0; k < kSampledCompletions; ++k) {
                BichromaticGraph full = g;
                for (const auto& p : unbuilt) full.build(p, (rng() & 1U) ? Color::Blue : Color::Red);
                check(full);
            }
        }
    }
    std::ostringstream d;
    d << kIndependenceGraphs << " graphs, " << independent_pairs << " independent pairs, " << completions
      << " completions (" << exhaustive_graphs << " graphs exhaustive), " << violations << " violations, "
      << predicate_disagreements << " predicate disagreements";
    report(violations == 0 && predicate_disagreements == 0 && independent_pairs > 0, "independence-exclusion", d.str());
}

void pipeline_totality() {
    struct Job {
        int N;
        std::string painter;
    };
    std::vector<Job> jobs;
    for (int N = 6; N <= 30; ++N) {
        for (const auto& p : painter_pool()) {
            if (p != "random") jobs.push_back({N, p});
        }
        if (N <= kMaxRetrogradeVertices) jobs.push_back({N, "minimax"});
        for (int seed = 0; seed < kRandomPainterSeeds; ++seed) jobs.push_back({N, "random:" + std::to_string(seed)});
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> losses{0};
    std::atomic<std::size_t> identity_failures{0};
    std::atomic<std::size_t> pairwise_runs{0};
    std::atomic<std::size_t> pairwise_failures{0};
    std::mutex first_mutex;
    std::string first_bad;
    const auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const GameConfig cfg{3, 3, jobs[i].N};
            try {
                auto builder = make_builder("paper", cfg);
                auto painter = make_painter(jobs[i].painter, cfg);
                const auto r = play(cfg, *builder, *painter);
                const auto total = static_cast<std::size_t>(jobs[i].N) * (jobs[i].N - 1) / 2;
                const bool won = r.final_state.status().outcome == GameOutcome::BuilderWon;
                const bool identity = r.report.moves_used + r.report.savings == total &&
                                      r.report.savings == r.final_state.graph().unbuilt_count();
                bool pairwise_ok = true;
                if (r.report.pairwise && !r.report.pairwise->larger_family_touched) {
                    ++pairwise_runs;
                    pairwise_ok = r.report.savings >= std::min(r.report.pairwise->p_size, r.report.pairwise->q_size);
                }
                losses += won ? 0 : 1;
                identity_failures += identity ? 0 : 1;
                pairwise_failures += pairwise_ok ? 0 : 1;
                if (!(won && identity && pairwise_ok)) {
                    const std::lock_guard lock(first_mutex);
                    if (first_bad.empty()) {
                        first_bad = " first failure N=" + std::to_string(jobs[i].N) + " painter " + jobs[i].painter;
                    }
                }
            } catch (const std::exception& e) {
                ++losses;
                const std::lock_guard lock(first_mutex);
                if (first_bad.empty()) first_bad = std::string(" exception: ") + e.what();
            }
        }
    };
    const auto start = Clock::now();
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < std::max(1U, std::thread::hardware_concurrency()); ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    std::ostringstream d;
    d << jobs.size() << " games on (3,3;6..30), " << losses << " not won, " << identity_failures
      << " accounting failures, " << pairwise_runs << " pairwise endgames with " << pairwise_failures
      << " savings shortfalls, " << seconds_since(start) << " s" << first_bad;
    report(losses == 0 && identity_failures == 0 && pairwise_failures == 0, "pipeline-totality", d.str());
}

// ---------------------------------------------------------------------------
// Least density: integer recomputation with eps = 1/10, mu = 1/100, nu = 1/22,
// delta = 1/220000.

struct DensityCounts {
    std::int64_t e_hl = 0;
    std::int64_t e_hr = 0;
    std::int64_t balanced = 0;
    std::int64_t s_red = 0;
    std::int64_t s_blue = 0;
};

DensityCounts density_counts(const std::vector<std::vector<int>>& red, int n0) {
    DensityCounts c;
    for (int u = 0; u < n0; ++u) {
        std::int64_t r = 0;
        for (int v = 0; v < n0; ++v) r += red[u][v];
        const std::int64_t b = n0 - r;
        c.e_hl += r * b;
        c.balanced += (100 * r >= n0 && 100 * b >= n0) ? 1 : 0;
        c.s_red += 100 * r >= 99 * n0 ? 1 : 0;
        c.s_blue += 100 * b >= 99 * n0 ? 1 : 0;
    }
    for (int v = 0; v < n0; ++v) {
        std::int64_t r = 0;
        for (int u = 0; u < n0; ++u) r += red[u][v];
        c.e_hr += r * (n0 - r);
    }
    return c;
}

BichromaticGraph bipartite_graph(const std::vector<std::vector<int>>& red, int n0) {
    BichromaticGraph g(2 * n0);
    for (int u = 0; u < n0; ++u) {
        for (int v = 0; v < n0; ++v) g.build(u, n0 + v, red[u][v] ? Color::Red : Color::Blue);
    }
    return g;
}

VertexSet vertex_range(int from, int to) {
    VertexSet s;
    for (int v = from; v < to; ++v) s.push_back(v);
    return s;
}

void least_density() {
    const Rational eps(1, 10);
    std::mt19937_64 rng(555);
    int few_balanced = 0;
    int violations = 0;
    int witness_mismatches = 0;
    for (int instance = 0; instance < kDensityInstances; ++instance) {
        const int n0 = 20 + static_cast<int>(rng() % 41);
        std::vector<std::vector<int>> red;
        for (;;) {
            red.assign(n0, std::vector<int>(n0, 0));
            // Even instances: nearly every left vertex monochromatic.
            const int mixed = instance % 2 == 0 ? static_cast<int>(rng() % (n0 / 22 + 1)) : n0;
            const double red_share = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
            for (int u = 0; u < n0; ++u) {
                const double p = u < mixed ? std::uniform_real_distribution<double>(0.0, 1.0)(rng)
                                           : (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < red_share ? 1.0 : 0.0);
                for (int v = 0; v < n0; ++v) red[u][v] = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
            }
            std::int64_t r = 0;
            for (const auto& row : red) r += std::count(row.begin(), row.end(), 1);
            if (10 * r >= static_cast<std::int64_t>(n0) * n0 && 10 * r <= 9 * static_cast<std::int64_t>(n0) * n0) break;
        }
        const auto c = density_counts(red, n0);
        const auto w = verify_least_density(bipartite_graph(red, n0), vertex_range(0, n0), vertex_range(n0, 2 * n0), eps);
        if (static_cast<std::int64_t>(w.e_hl) != c.e_hl || static_cast<std::int64_t>(w.e_hr) != c.e_hr ||
            static_cast<std::int64_t>(w.balanced_vertices.size()) != c.balanced ||
            static_cast<std::int64_t>(w.s_red.size()) != c.s_red ||
            static_cast<std::int64_t>(w.s_blue.size()) != c.s_blue) {
            ++witness_mismatches;
        }
        if (22 * c.balanced < n0) {
            ++few_balanced;
            if (100 * c.e_hr < c.s_red * c.s_blue * 98 * n0 || !w.intermediate_holds) ++violations;
        }
    }

    // Extremes: half the left class all red and half all blue (no balanced
    // vertices), and a checkerboard (every vertex balanced).
    const int n0 = 40;
    std::vector<std::vector<int>> split(n0, std::vector<int>(n0));
    std::vector<std::vector<int>> board(n0, std::vector<int>(n0));
    for (int u = 0; u < n0; ++u) {
        for (int v = 0; v < n0; ++v) {
            split[u][v] = u < n0 / 2;
            board[u][v] = (u + v) % 2 == 0;
        }
    }
    int extremes_ok = 0;
    std::ostringstream extremes;
    for (const auto* m : {&split, &board}) {
        const auto c = density_counts(*m, n0);
        const auto w = verify_least_density(bipartite_graph(*m, n0), vertex_range(0, n0), vertex_range(n0, 2 * n0), eps);
        // max(e_HL, e_HR) >= N0^3 / 220000
        const bool ok = 220000 * std::max(c.e_hl, c.e_hr) >= static_cast<std::int64_t>(n0) * n0 * n0 && w.dense_incidence;
        extremes_ok += ok ? 1 : 0;
        extremes << " max(e_HL,e_HR)=" << std::max(c.e_hl, c.e_hr);
    }
    std::ostringstream d;
    d << kDensityInstances << " instances, " << few_balanced << " with few balanced vertices, " << violations
      << " inequality violations, " << witness_mismatches << " witness mismatches; extremes " << extremes_ok
      << "/2 at N0=" << n0 << " (delta N0^3 = " << (static_cast<double>(n0) * n0 * n0 / 220000) << ")"
      << extremes.str();
    report(violations == 0 && witness_mismatches == 0 && few_balanced > 0 && extremes_ok == 2, "least-density", d.str());
}

// ---------------------------------------------------------------------------

// Contains K_{s,t} with the s side in U (rows) and the t side in W (columns).
bool contains_kst(const std::vector<std::vector<int>>& adj, int s, int t) {
    const int m = static_cast<int>(adj.size());
    const int n = static_cast<int>(adj[0].size());
    std::vector<int> pick(s);
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == s) {
            int common = 0;
            for (int w = 0; w < n; ++w) {
                bool all = true;
                for (const int u : pick) all = all && adj[u][w];
                common += all ? 1 : 0;
            }
            return common >= t;
        }
        for (int u = start; u < m; ++u) {
            pick[depth] = u;
            if (rec(u + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

void kst_conformance() {
    std::mt19937_64 rng(4242);
    int searches = 0;
    int violations = 0;
    std::size_t densest = 0;
    for (const auto [s, t] : {std::pair{2, 2}, std::pair{2, 3}}) {
        for (int k = 0; k < kKstSearches; ++k) {
            const int m = s + static_cast<int>(rng() % (13 - s));
            const int n = t + static_cast<int>(rng() % (13 - t));
            std::vector<std::vector<int>> adj(m, std::vector<int>(n, 0));
            std::vector<std::pair<int, int>> cells;
            for (int u = 0; u < m; ++u) {
                for (int w = 0; w < n; ++w) cells.emplace_back(u, w);
            }
            std::shuffle(cells.begin(), cells.end(), rng);
            std::size_t edges = 0;
            for (const auto& [u, w] : cells) {
                adj[u][w] = 1;
                if (contains_kst(adj, s, t)) {
                    adj[u][w] = 0;
                } else {
                    ++edges;
                }
            }
            ++searches;
            densest = std::max(densest, edges);
            if (!(Rational(static_cast<std::int64_t>(edges)) < kst_bound(m, n, s, t))) ++violations;
        }
    }
    // (t-1)^{1/s} (m-s+1) n^{1-1/s} + (s-1) n at (4,4,2,2): 1 * 3 * 2 + 4.
    const auto spot = kst_bound(4, 4, 2, 2);
    std::ostringstream d;
    d << searches << " maximal K_{s,t}-free graphs, " << violations << " at or above the bound (densest " << densest
      << " edges); kst_bound(4,4,2,2) = " << spot;
    report(violations == 0 && spot == Rational(10), "kst-conformance", d.str());
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path fixtures = argc > 1 ? argv[1] : RAMSEY_FIXTURE_DIR;
    const auto start = Clock::now();
    exact_small_values();
    oracle_equivalence();
    retrograde_ground_truth();
    pairwise_fixtures(fixtures);
    independence_fuzz();
    pipeline_totality();
    least_density();
    kst_conformance();
    std::cout << "NOTE asymptotic-savings: the N log N savings bound is asymptotic; the sweep CSV records the "
                 "empirical savings curve and is not a pass/fail item"
              << std::endl;
    std::cout << (all_ok ? "ALL PASS" : "SOME FAILED") << " in " << seconds_since(start) << " s" << std::endl;
    return all_ok ? 0 : 1;
}
