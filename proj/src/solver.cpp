#include "ramsey/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace ramsey {

namespace {

std::vector<std::uint32_t> clique_masks(int N, int k, const std::vector<int>& rank_of) {
    std::vector<std::uint32_t> out;
    if (k < 2 || k > N) return out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                mask |= 1U << rank_of[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)] * N +
                                                               pick[static_cast<std::size_t>(b)])];
            }
        }
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void check_solver_size(int N) {
    if (N > kMaxSolverVertices) {
        throw SolverError(SolverError::Code::PositionTooLarge,
                          "exact solving supports at most " + std::to_string(kMaxSolverVertices) + " vertices, got " +
                              std::to_string(N));
    }
}

}  // namespace

PositionSpace::PositionSpace(const GameConfig& config)
    : config_(config), pairs_(static_cast<int>(choose2(static_cast<std::size_t>(config.N)))) {
    config_.validate();
    check_solver_size(config_.N);
    all_ = pairs_ == 32 ? ~0U : ((1U << pairs_) - 1U);
    const int N = config_.N;
    rank_of_.assign(static_cast<std::size_t>(N * N), -1);
    for (int u = 0, r = 0; u < N; ++u) {
        for (int v = u + 1; v < N; ++v, ++r) {
            endpoints_.push_back({u, v});
            rank_of_[static_cast<std::size_t>(u * N + v)] = r;
            rank_of_[static_cast<std::size_t>(v * N + u)] = r;
        }
    }
    red_cliques_ = clique_masks(N, config_.m, rank_of_);
    blue_cliques_ = clique_masks(N, config_.n, rank_of_);
    red_through_.resize(static_cast<std::size_t>(pairs_));
    blue_through_.resize(static_cast<std::size_t>(pairs_));
    for (int r = 0; r < pairs_; ++r) {
        for (const auto m : red_cliques_) {
            if (m >> r & 1U) red_through_[static_cast<std::size_t>(r)].push_back(m);
        }
        for (const auto m : blue_cliques_) {
            if (m >> r & 1U) blue_through_[static_cast<std::size_t>(r)].push_back(m);
        }
    }
}

PositionSpace::Position PositionSpace::encode(const BichromaticGraph& g) const {
    if (g.vertex_count() != config_.N) {
        throw GameError(GameError::Code::InvalidConfig, "graph vertex count does not match N");
    }
    Position p;
    for (const auto& e : g.built_edges()) {
        const auto bit = 1U << rank_of_[static_cast<std::size_t>(e.pair.u * config_.N + e.pair.v)];
        (e.color == Color::Red ? p.red : p.blue) |= bit;
    }
    return p;
}

bool PositionSpace::won(const Position& p) const {
    for (const auto m : red_cliques_) {
        if ((p.red & m) == m) return true;
    }
    for (const auto m : blue_cliques_) {
        if ((p.blue & m) == m) return true;
    }
    return false;
}

bool PositionSpace::completes(const Position& p, int rank, Color c) const {
    const auto& masks = c == Color::Red ? red_through_[static_cast<std::size_t>(rank)]
                                        : blue_through_[static_cast<std::size_t>(rank)];
    const auto have = c == Color::Red ? p.red : p.blue;
    return std::any_of(masks.begin(), masks.end(), [have](std::uint32_t m) { return (have & m) == m; });
}

std::optional<int> PositionSpace::needed_edges(const Position& p) const {
    int best = pairs_ + 1;
    for (const auto m : red_cliques_) {
        if ((m & p.blue) == 0) best = std::min(best, std::popcount(m & ~p.red));
    }
    for (const auto m : blue_cliques_) {
        if ((m & p.red) == 0) best = std::min(best, std::popcount(m & ~p.blue));
    }
    if (best > pairs_) return std::nullopt;
    return best;
}

std::uint64_t PositionSpace::canonical(const Position& p) const {
    const int N = config_.N;
    std::array<std::uint32_t, kMaxSolverVertices> red_adj{};
    std::array<std::uint32_t, kMaxSolverVertices> blue_adj{};
    struct Built {
        int u;
        int v;
        std::uint64_t state;
    };
    std::array<Built, 28> built{};
    std::size_t built_count = 0;
    for (int r = 0; r < pairs_; ++r) {
        const auto [u, v] = endpoints_[static_cast<std::size_t>(r)];
        if (p.red >> r & 1U) {
            red_adj[static_cast<std::size_t>(u)] |= 1U << v;
            red_adj[static_cast<std::size_t>(v)] |= 1U << u;
            built[built_count++] = {u, v, 1};
        } else if (p.blue >> r & 1U) {
            blue_adj[static_cast<std::size_t>(u)] |= 1U << v;
            blue_adj[static_cast<std::size_t>(v)] |= 1U << u;
            built[built_count++] = {u, v, 2};
        }
    }

    // Color refinement: a vertex's signature is its class plus, per class, how
    // many red and blue neighbors it has there (3 bits per count, 8 classes).
    std::array<int, kMaxSolverVertices> cls{};
    int classes = 1;
    for (int round = 0; round < N; ++round) {
        std::array<std::uint64_t, kMaxSolverVertices> sig{};
        for (int v = 0; v < N; ++v) {
            std::uint64_t rc = 0;
            std::uint64_t bc = 0;
            for (std::uint32_t w = red_adj[static_cast<std::size_t>(v)]; w != 0; w &= w - 1) {
                rc += std::uint64_t{1} << (3 * cls[static_cast<std::size_t>(std::countr_zero(w))]);
            }
            for (std::uint32_t w = blue_adj[static_cast<std::size_t>(v)]; w != 0; w &= w - 1) {
                bc += std::uint64_t{1} << (3 * cls[static_cast<std::size_t>(std::countr_zero(w))]);
            }
            sig[static_cast<std::size_t>(v)] =
                (static_cast<std::uint64_t>(cls[static_cast<std::size_t>(v)]) << 48) | (rc << 24) | bc;
        }
        std::array<std::uint64_t, kMaxSolverVertices> sorted = sig;
        std::sort(sorted.begin(), sorted.begin() + N);
        const auto end = std::unique(sorted.begin(), sorted.begin() + N);
        const int next_classes = static_cast<int>(end - sorted.begin());
        for (int v = 0; v < N; ++v) {
            cls[static_cast<std::size_t>(v)] =
                static_cast<int>(std::lower_bound(sorted.begin(), end, sig[static_cast<std::size_t>(v)]) - sorted.begin());
        }
        if (next_classes == classes) break;
        classes = next_classes;
    }

    std::array<int, kMaxSolverVertices> order{};
    for (int v = 0; v < N; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.begin() + N, [&](int a, int b) {
        return cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)]
                   ? cls[static_cast<std::size_t>(a)] < cls[static_cast<std::size_t>(b)]
                   : a < b;
    });
    std::array<int, kMaxSolverVertices + 1> cell_start{};
    int cells = 0;
    for (int i = 0; i < N; ++i) {
        if (i == 0 || cls[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                          cls[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) {
            cell_start[static_cast<std::size_t>(cells++)] = i;
        }
    }
    cell_start[static_cast<std::size_t>(cells)] = N;

    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, kMaxSolverVertices> pos{};
    while (true) {
        for (int i = 0; i < N; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        std::uint64_t code = 0;
        for (std::size_t k = 0; k < built_count; ++k) {
            const int a = pos[static_cast<std::size_t>(built[k].u)];
            const int b = pos[static_cast<std::size_t>(built[k].v)];
            const int r = rank_of_[static_cast<std::size_t>(a * N + b)];
            code |= built[k].state << (2 * (pairs_ - 1 - r));
        }
        best = std::min(best, code);
        int c = cells - 1;
        for (; c >= 0; --c) {
            auto* first = order.data() + cell_start[static_cast<std::size_t>(c)];
            auto* last = order.data() + cell_start[static_cast<std::size_t>(c + 1)];
            if (std::next_permutation(first, last)) break;
        }
        if (c < 0) break;
    }
    return best;
}

std::vector<std::uint8_t> CanonicalCode::bytes() const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(vertex_count));
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(packed >> (8 * i)));
    return out;
}

CanonicalCode canonical_code(const BichromaticGraph& g) {
    check_solver_size(g.vertex_count());
    // Targets do not affect the code; any valid config over N vertices works.
    const PositionSpace space(GameConfig{2, 2, std::max(2, g.vertex_count())});
    if (g.vertex_count() < 2) return {g.vertex_count(), 0};
    return {g.vertex_count(), space.canonical(space.encode(g))};
}

// ---------------------------------------------------------------------------

ExactSolver::ExactSolver(const GameConfig& config, SolverOptions options) : space_(config), options_(options) {}

std::uint8_t ExactSolver::child_value(const PositionSpace::Position& parent, int rank, Color c) {
    PositionSpace::Position child = parent;
    (c == Color::Red ? child.red : child.blue) |= 1U << rank;
    if (space_.completes(child, rank, c)) return 1;
    const auto v = search(child);
    return v == kInfinite ? kInfinite : static_cast<std::uint8_t>(v + 1);
}

std::uint8_t ExactSolver::search(PositionSpace::Position p) {
    const std::uint64_t raw = static_cast<std::uint64_t>(p.red) | (static_cast<std::uint64_t>(p.blue) << 32);
    if (const auto it = raw_table_.find(raw); it != raw_table_.end()) {
        ++hits_;
        return it->second;
    }
    const std::uint64_t canon = space_.canonical(p);
    if (const auto it = canonical_table_.find(canon); it != canonical_table_.end()) {
        ++hits_;
        raw_table_.emplace(raw, it->second);
        return it->second;
    }
    if (++nodes_ > options_.node_budget) {
        const auto lb = space_.needed_edges(p);
        throw SolverError(SolverError::Code::BudgetExceeded,
                          "node budget of " + std::to_string(options_.node_budget) + " exhausted",
                          lb.value_or(0), std::popcount(space_.all_pairs() & ~(p.red | p.blue)));
    }

    std::uint8_t best = kInfinite;
    if (const auto lower = space_.needed_edges(p)) {
        const std::uint32_t unbuilt = space_.all_pairs() & ~(p.red | p.blue);
        for (std::uint32_t bits = unbuilt; bits != 0; bits &= bits - 1) {
            const int r = std::countr_zero(bits);
            std::uint8_t worst = 0;
            for (const Color c : {Color::Blue, Color::Red}) {
                PositionSpace::Position child = p;
                (c == Color::Red ? child.red : child.blue) |= 1U << r;
                // The child's admissible bound alone may already rule the move out.
                if (!space_.completes(child, r, c)) {
                    const auto child_lower = space_.needed_edges(child);
                    const int bound = child_lower ? 1 + *child_lower : kInfinite;
                    if (bound >= best) {
                        worst = static_cast<std::uint8_t>(std::max<int>(worst, bound));
                        break;
                    }
                }
                worst = std::max(worst, child_value(p, r, c));
                if (worst >= best) break;
            }
            best = std::min(best, worst);
            if (best <= *lower) break;
        }
    }
    canonical_table_.emplace(canon, best);
    raw_table_.emplace(raw, best);
    return best;
}

std::vector<ColoredEdge> ExactSolver::principal_variation(PositionSpace::Position p) {
    std::vector<ColoredEdge> line;
    while (!space_.won(p)) {
        const auto v = search(p);
        if (v == kInfinite) break;
        const std::uint32_t unbuilt = space_.all_pairs() & ~(p.red | p.blue);
        bool advanced = false;
        for (std::uint32_t bits = unbuilt; bits != 0 && !advanced; bits &= bits - 1) {
            const int r = std::countr_zero(bits);
            const auto red = child_value(p, r, Color::Red);
            const auto blue = child_value(p, r, Color::Blue);
            if (std::max(red, blue) != v) continue;
            const Color c = red >= blue ? Color::Red : Color::Blue;
            line.push_back({space_.pair(r), c});
            (c == Color::Red ? p.red : p.blue) |= 1U << r;
            advanced = true;
        }
        if (!advanced) break;
    }
    return line;
}

std::optional<int> ExactSolver::value(const BichromaticGraph& g) {
    const auto p = space_.encode(g);
    if (space_.won(p)) return 0;
    const auto v = search(p);
    if (v == kInfinite) return std::nullopt;
    return v;
}

SolverResult ExactSolver::solve(const BichromaticGraph& g) {
    SolverResult result;
    result.value = value(g);
    if (result.value) result.principal_variation = principal_variation(space_.encode(g));
    result.nodes_expanded = nodes_;
    result.table_hits = hits_;
    return result;
}

SolverResult solve_from(const BichromaticGraph& g, const GameConfig& config, SolverOptions options) {
    ExactSolver solver(config, options);
    return solver.solve(g);
}

// ---------------------------------------------------------------------------

RetrogradeTable::RetrogradeTable(const GameConfig& config) : config_(config) {
    config_.validate();
    if (config_.N > kMaxRetrogradeVertices) {
        throw SolverError(SolverError::Code::PositionTooLarge,
                          "retrograde tables support at most " + std::to_string(kMaxRetrogradeVertices) + " vertices");
    }
    const PositionSpace space(config_);
    const int P = space.pair_count();
    std::vector<std::size_t> power(static_cast<std::size_t>(P) + 1, 1);
    for (int i = 1; i <= P; ++i) power[static_cast<std::size_t>(i)] = power[static_cast<std::size_t>(i - 1)] * 3;
    const std::size_t total = power[static_cast<std::size_t>(P)];
    values_.assign(total, 0);

    constexpr std::uint8_t inf = 0xff;
    std::vector<std::uint8_t> digit(static_cast<std::size_t>(P), 2);
    for (std::size_t idx = total; idx-- > 0;) {
        PositionSpace::Position pos;
        std::uint32_t unbuilt = 0;
        for (int r = 0; r < P; ++r) {
            const auto d = digit[static_cast<std::size_t>(r)];
            if (d == 1) pos.red |= 1U << r;
            else if (d == 2) pos.blue |= 1U << r;
            else unbuilt |= 1U << r;
        }
        std::uint8_t v = 0;
        if (!space.won(pos)) {
            v = inf;
            for (std::uint32_t bits = unbuilt; bits != 0; bits &= bits - 1) {
                const int r = std::countr_zero(bits);
                const auto red = values_[idx + power[static_cast<std::size_t>(r)]];
                const auto blue = values_[idx + 2 * power[static_cast<std::size_t>(r)]];
                const auto worst = std::max(red, blue);
                if (worst != inf) v = std::min<std::uint8_t>(v, static_cast<std::uint8_t>(worst + 1));
            }
        }
        values_[idx] = v;
        // Decrement the base-3 digit vector to match idx - 1.
        for (int r = 0; r < P; ++r) {
            auto& d = digit[static_cast<std::size_t>(r)];
            if (d > 0) {
                --d;
                break;
            }
            d = 2;
        }
    }
}

std::size_t RetrogradeTable::index_of(const BichromaticGraph& g) const {
    if (g.vertex_count() != config_.N) {
        throw GameError(GameError::Code::InvalidConfig, "graph vertex count does not match N");
    }
    std::size_t idx = 0;
    std::size_t weight = 1;
    for (std::size_t r = 0; r < g.pair_count(); ++r, weight *= 3) {
        const Pair p = g.pair_at(r);
        const auto s = g.state(p.u, p.v);
        idx += weight * (s == PairState::Red ? 1 : s == PairState::Blue ? 2 : 0);
    }
    return idx;
}

std::optional<int> RetrogradeTable::value_at(std::size_t index) const {
    const auto v = values_.at(index);
    if (v == 0xff) return std::nullopt;
    return v;
}

// ---------------------------------------------------------------------------

namespace {

class TreeOracle {
public:
    explicit TreeOracle(const GameConfig& config) : space_(config) {}

    std::uint8_t value(PositionSpace::Position p) {
        if (space_.won(p)) return 0;
        const std::uint64_t key = static_cast<std::uint64_t>(p.red) | (static_cast<std::uint64_t>(p.blue) << 32);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint8_t best = 0xff;
        const std::uint32_t unbuilt = space_.all_pairs() & ~(p.red | p.blue);
        for (std::uint32_t bits = unbuilt; bits != 0; bits &= bits - 1) {
            const int r = std::countr_zero(bits);
            auto red = p;
            red.red |= 1U << r;
            auto blue = p;
            blue.blue |= 1U << r;
            const auto worst = std::max(value(red), value(blue));
            if (worst != 0xff) best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(worst + 1));
        }
        memo_.emplace(key, best);
        return best;
    }

    const PositionSpace& space() const { return space_; }

private:
    PositionSpace space_;
    std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

const RetrogradeTable& cached_table(const GameConfig& config) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<RetrogradeTable>> tables;
    const std::lock_guard lock(mutex);
    auto& slot = tables[{config.m, config.n, config.N}];
    if (!slot) slot = std::make_unique<RetrogradeTable>(config);
    return *slot;
}

}  // namespace

std::optional<int> brute_value(const BichromaticGraph& g, const GameConfig& config) {
    config.validate();
    if (config.N == kMaxRetrogradeVertices) return cached_table(config).value(g);
    if (config.N > kMaxRetrogradeVertices) {
        throw SolverError(SolverError::Code::PositionTooLarge, "brute-force oracle supports at most 6 vertices");
    }
    TreeOracle oracle(config);
    const auto v = oracle.value(oracle.space().encode(g));
    if (v == 0xff) return std::nullopt;
    return v;
}

std::optional<std::int64_t> savings_of(const BichromaticGraph& g, const GameConfig& config) {
    const auto result = solve_from(g, config);
    if (!result.value) return std::nullopt;
    return static_cast<std::int64_t>(config.total_pairs()) - static_cast<std::int64_t>(g.built_count()) - *result.value;
}

}  // namespace ramsey
