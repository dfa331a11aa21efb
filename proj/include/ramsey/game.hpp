#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ramsey/graph.hpp"

namespace ramsey {

// Builder wins on a red K_m or a blue K_n on N vertices.
struct GameConfig {
    int m = 3;
    int n = 3;
    int N = 6;

    // Throws GameError{InvalidConfig} unless m, n >= 2 and N >= 2.
    void validate() const;
    int target(Color c) const { return c == Color::Red ? m : n; }
    std::size_t total_pairs() const { return choose2(static_cast<std::size_t>(N)); }

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

class GameError : public std::runtime_error {
public:
    enum class Code { InvalidConfig, IllegalBuilderMove, PolicyExhausted, GameFinished, ReplayDivergence, Parse };

    GameError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

enum class GameOutcome { InProgress, BuilderWon, Stalemate };

struct GameStatus {
    GameOutcome outcome = GameOutcome::InProgress;
    std::optional<Color> color;  // set when BuilderWon
    VertexSet clique;            // the winning clique, sorted

    // RED_WIN, BLUE_WIN, STALEMATE or IN_PROGRESS.
    std::string label() const;
    friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

// Evolving position of an (m,n;N)-game, optionally started from a seed graph.
class GameState {
public:
    explicit GameState(GameConfig config, std::optional<BichromaticGraph> seed = std::nullopt);

    const GameConfig& config() const { return config_; }
    const BichromaticGraph& graph() const { return graph_; }
    const std::optional<BichromaticGraph>& seed() const { return seed_; }
    const GameStatus& status() const { return status_; }
    const std::vector<ColoredEdge>& moves() const { return moves_; }
    std::size_t moves_made() const { return moves_.size(); }
    bool finished() const { return status_.outcome != GameOutcome::InProgress; }
    // Pairs still unbuilt out of all C(N,2).
    std::size_t savings() const { return graph_.unbuilt_count(); }

    // Builds p with color c and updates the status through an incremental
    // clique check on p. Throws GameError{GameFinished} or GraphError.
    void apply(const Pair& p, Color c);

private:
    void refresh_from_scratch();

    GameConfig config_;
    std::optional<BichromaticGraph> seed_;
    BichromaticGraph graph_;
    std::vector<ColoredEdge> moves_;
    GameStatus status_;
};

struct PhaseRecord {
    std::string name;
    std::size_t moves = 0;
    nlohmann::json witness = nlohmann::json::object();
};

// Outcome of the independent-pair endgame, when a strategy reached it.
struct PairwiseRecord {
    std::size_t p_size = 0;
    std::size_t q_size = 0;
    bool larger_family_touched = false;
};

class BuilderPolicy {
public:
    virtual ~BuilderPolicy() = default;
    virtual std::string name() const = 0;
    // An unbuilt pair, or nullopt if the policy has nothing left to offer.
    virtual std::optional<Pair> next_move(const GameState& state) = 0;
    virtual void observe(const GameState& /*state*/, const ColoredEdge& /*move*/) {}
    virtual std::vector<PhaseRecord> phase_log() const { return {}; }
    virtual std::optional<PairwiseRecord> pairwise() const { return std::nullopt; }
};

class PainterPolicy {
public:
    virtual ~PainterPolicy() = default;
    virtual std::string name() const = 0;
    virtual Color choose(const GameState& state, const Pair& proposed) = 0;
};

struct StrategyReport {
    std::size_t moves_used = 0;
    std::size_t savings = 0;
    std::vector<PhaseRecord> phase_log;
    std::optional<PairwiseRecord> pairwise;

    nlohmann::json to_json(const GameStatus& status) const;
};

struct Transcript {
    GameConfig config;
    std::optional<BichromaticGraph> seed;
    std::vector<ColoredEdge> moves;
    GameStatus status;
    std::size_t savings = 0;

    // Header `m n N`, optional `SEED k` block of k edge lines, one `u v R|B`
    // line per move, then `RESULT <status> moves=<k> savings=<s>`.
    std::string serialize() const;
    static Transcript parse(std::string_view text);

    // Re-applies the moves from the seed; throws GameError{ReplayDivergence}
    // if the result line disagrees with the replayed state.
    GameState replay() const;

    static Transcript of(const GameState& state);
};

struct PlayResult {
    Transcript transcript;
    StrategyReport report;
    GameState final_state;
};

// Runs Builder/Painter turns until Builder wins or every pair is built.
PlayResult play(const GameConfig& config, BuilderPolicy& builder, PainterPolicy& painter,
                const std::optional<BichromaticGraph>& seed = std::nullopt);

// report.savings >= min(s, t).
bool savings_lower_bound_check(const StrategyReport& report, std::size_t s, std::size_t t);

}  // namespace ramsey
