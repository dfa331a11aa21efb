#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr int kMaxSolverVertices = 8;
inline constexpr int kMaxRetrogradeVertices = 6;

class SolverError : public std::runtime_error {
public:
    enum class Code { PositionTooLarge, BudgetExceeded };

    SolverError(Code code, const std::string& what, int lower = 0, int upper = 0)
        : std::runtime_error(what), code_(code), lower_(lower), upper_(upper) {}
    Code code() const { return code_; }
    // Bounds on the root value known when the budget ran out.
    int lower_bound() const { return lower_; }
    int upper_bound() const { return upper_; }

private:
    Code code_;
    int lower_;
    int upper_;
};

// Relabeling-invariant code of a bichromatic graph on at most 8 vertices: the
// lexicographically smallest 2-bit-per-pair state string over all vertex
// orders compatible with a color-refinement partition.
struct CanonicalCode {
    int vertex_count = 0;
    std::uint64_t packed = 0;

    std::vector<std::uint8_t> bytes() const;
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const BichromaticGraph& g);

// Pair masks and target cliques for one (m,n;N) on at most 8 vertices.
class PositionSpace {
public:
    explicit PositionSpace(const GameConfig& config);

    struct Position {
        std::uint32_t red = 0;
        std::uint32_t blue = 0;
    };

    const GameConfig& config() const { return config_; }
    int pair_count() const { return pairs_; }
    std::uint32_t all_pairs() const { return all_; }
    Pair pair(int rank) const { return endpoints_[static_cast<std::size_t>(rank)]; }

    Position encode(const BichromaticGraph& g) const;
    bool won(const Position& p) const;
    // True if coloring `rank` with c (already applied to p) completes a target clique.
    bool completes(const Position& p, int rank, Color c) const;
    // Minimum unbuilt pairs of any still-completable target clique, or
    // nullopt if none is completable.
    std::optional<int> needed_edges(const Position& p) const;

    std::uint64_t canonical(const Position& p) const;

private:
    GameConfig config_;
    int pairs_;
    std::uint32_t all_;
    std::vector<Pair> endpoints_;
    std::vector<int> rank_of_;  // N*N table
    std::vector<std::uint32_t> red_cliques_;
    std::vector<std::uint32_t> blue_cliques_;
    std::vector<std::vector<std::uint32_t>> red_through_;
    std::vector<std::vector<std::uint32_t>> blue_through_;
};

struct SolverOptions {
    std::size_t node_budget = 50'000'000;
};

struct SolverResult {
    // Moves Builder needs under optimal play; nullopt when Painter can avoid
    // every target clique forever.
    std::optional<int> value;
    std::vector<ColoredEdge> principal_variation;
    std::size_t nodes_expanded = 0;
    std::size_t table_hits = 0;
};

// value(g) = 0 if g contains a target clique, otherwise
// 1 + min over unbuilt e of max over colors c of value(g + e:c).
// Memoized on canonical codes; moves are cut once they provably cannot beat
// the best move so far, so every stored value is exact.
class ExactSolver {
public:
    explicit ExactSolver(const GameConfig& config, SolverOptions options = {});

    SolverResult solve(const BichromaticGraph& g);
    std::optional<int> value(const BichromaticGraph& g);

    std::size_t nodes_expanded() const { return nodes_; }
    std::size_t table_hits() const { return hits_; }
    std::size_t table_size() const { return canonical_table_.size(); }

private:
    static constexpr std::uint8_t kInfinite = 0xff;

    std::uint8_t search(PositionSpace::Position p);
    std::uint8_t child_value(const PositionSpace::Position& parent, int rank, Color c);
    std::vector<ColoredEdge> principal_variation(PositionSpace::Position p);

    PositionSpace space_;
    SolverOptions options_;
    std::unordered_map<std::uint64_t, std::uint8_t> raw_table_;
    std::unordered_map<std::uint64_t, std::uint8_t> canonical_table_;
    std::size_t nodes_ = 0;
    std::size_t hits_ = 0;
};

SolverResult solve_from(const BichromaticGraph& g, const GameConfig& config, SolverOptions options = {});

// Full table over all 3^P pair-state vectors (P = C(N,2), N <= 6), filled in
// descending base-3 index order: every child of a state has a larger index.
class RetrogradeTable {
public:
    explicit RetrogradeTable(const GameConfig& config);

    std::size_t size() const { return values_.size(); }
    std::size_t index_of(const BichromaticGraph& g) const;
    std::optional<int> value_at(std::size_t index) const;
    std::optional<int> value(const BichromaticGraph& g) const { return value_at(index_of(g)); }

private:
    GameConfig config_;
    std::vector<std::uint8_t> values_;
};

// Oracle: the same recursion with no canonicalization and no pruning. Full
// tree with a raw position map for N <= 5, the retrograde table for N = 6.
std::optional<int> brute_value(const BichromaticGraph& g, const GameConfig& config);

// C(N,2) - e(g) - value(g), or nullopt if Builder cannot win from g.
std::optional<std::int64_t> savings_of(const BichromaticGraph& g, const GameConfig& config);

}  // namespace ramsey
