#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/game.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

// Parameters of the multipartite / independent-pair Builder.
struct PaperStrategyParams {
    int parts = 2;
    Rational eps{1, 10};
    std::optional<int> a_target;
    std::optional<int> b_target;

    // parts = max(2, floor(sqrt(N))), eps = 1/10.
    static PaperStrategyParams defaults(int N);

    // eps^5 / (2 (1 + eps)); derived on every call, never stored.
    Rational delta() const;
    // ceil(delta * ln N0) and ceil(N0 * ln N0), before any capping.
    int default_a(int part_size) const;
    int default_b(int part_size) const;

    void validate() const;
};

struct Biclique {
    std::vector<std::size_t> left;   // indices into IncidenceGraph::left_vertices()
    std::vector<std::size_t> right;  // indices into IncidenceGraph::right_pairs()
};

// Exact for a <= 4 (every left a-set, intersecting rows); greedy growth
// beyond that. An absent result in exact mode means H has no K_{a,b}.
std::optional<Biclique> biclique_mine(const IncidenceGraph& h, int a, int b);
inline constexpr int kExactBicliqueLimit = 4;

struct PairFamilies {
    std::vector<Pair> p;
    std::vector<Pair> q;
};

class StrategyError : public std::runtime_error {
public:
    enum class Code { EmptyFamily, InvalidParams, UnknownPolicy };
    StrategyError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// P: unbuilt (u, u') with u in the biclique's left set and u' elsewhere in the
// single-vertex class; Q: the biclique's right pairs that are unbuilt.
// Throws StrategyError{EmptyFamily} if either family comes out empty.
PairFamilies assemble_pair_families(const BichromaticGraph& g, const IncidenceGraph& h, const Biclique& biclique);

// Every (p, q) in P x Q passes are_independent.
bool families_cross_independent(const BichromaticGraph& g, const PairFamilies& fams);

// sum(s_j) - max(s_j).
std::size_t generalized_family_savings(const std::vector<std::size_t>& sizes);

// First part pair (lexicographic) with eps <= d_R <= 1 - eps.
std::optional<std::pair<int, int>> balanced_pair_search(const BichromaticGraph& g, const PartitionLayout& layout,
                                                        const Rational& eps);

// The layout used by the multipartite phase: `parts` parts of floor(N/parts).
PartitionLayout multipartite_layout(int N, const PaperStrategyParams& params);

// Move plans. Each returns pairs to build in order; pairs already built when
// their turn comes are skipped by the policies.

// Unbuilt pairs inside the chosen parts.
std::vector<Pair> multipartite_endgame_plan(const BichromaticGraph& g, const PartitionLayout& layout,
                                            const std::vector<int>& chosen_parts);

struct PairwisePlan {
    std::vector<Pair> rest;
    std::vector<Pair> smaller;
    std::vector<Pair> larger;
};
PairwisePlan pairwise_endgame_plan(const BichromaticGraph& g, const PairFamilies& fams);

// Pairs whose red coloring would complete a red K_m right now.
bool is_forced(const BichromaticGraph& g, const Pair& p, int m);

// --- game-driving forms of the pipeline phases --------------------------------

struct MultipartitePhaseResult {
    PartitionLayout layout;
    std::optional<ReducedGraph> reduced;  // absent if the game ended mid-phase
    std::size_t moves = 0;
};
MultipartitePhaseResult multipartite_phase(GameState& state, PainterPolicy& painter, const PaperStrategyParams& params);

struct EndgameResult {
    std::size_t moves = 0;
    bool won = false;
    std::vector<int> chosen_parts;  // multipartite endgame only
    std::optional<Color> part_clique_color;
    bool larger_family_touched = false;  // pairwise endgame only
};
EndgameResult multipartite_endgame(GameState& state, PainterPolicy& painter, const PartitionLayout& layout,
                                   const ReducedGraph& reduced);
EndgameResult pairwise_endgame(GameState& state, PainterPolicy& painter, const PairFamilies& fams);

// --- policies ------------------------------------------------------------------

std::unique_ptr<BuilderPolicy> naive_builder(const GameConfig& config);
std::unique_ptr<BuilderPolicy> paper_builder(const GameConfig& config, PaperStrategyParams params);
std::unique_ptr<BuilderPolicy> forced_edge_builder(const GameConfig& config);

// `naive`, `paper`, `forced-edge`; overrides like "C=4", "eps=1/8", "a=1", "b=6"
// apply to `paper` only.
std::unique_ptr<BuilderPolicy> make_builder(const std::string& name, const GameConfig& config,
                                            const std::vector<std::string>& overrides = {});

}  // namespace ramsey
