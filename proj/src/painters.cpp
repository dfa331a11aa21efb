#include "ramsey/painters.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "ramsey/builders.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/solver.hpp"

namespace ramsey {

namespace {

class RandomPainter final : public PainterPolicy {
public:
    explicit RandomPainter(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "random:" + std::to_string(seed_); }
    Color choose(const GameState&, const Pair&) override { return (rng_() >> 63) != 0 ? Color::Blue : Color::Red; }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

class GreedyPainter final : public PainterPolicy {
public:
    explicit GreedyPainter(const GameConfig& config) : config_(config) {}
    std::string name() const override { return "greedy"; }

    Color choose(const GameState& state, const Pair& p) override {
        const auto& g = state.graph();
        const int red = largest_clique_through(g, p, Color::Red);
        const int blue = largest_clique_through(g, p, Color::Blue);
        const bool red_loses = red >= config_.m;
        const bool blue_loses = blue >= config_.n;
        if (red_loses != blue_loses) return red_loses ? Color::Blue : Color::Red;
        if (red != blue) return red < blue ? Color::Red : Color::Blue;
        if (g.red_count() != g.blue_count()) return g.red_count() < g.blue_count() ? Color::Red : Color::Blue;
        return Color::Red;
    }

private:
    GameConfig config_;
};

class BalancedPainter final : public PainterPolicy {
public:
    std::string name() const override { return "balanced"; }
    Color choose(const GameState& state, const Pair&) override {
        const auto& g = state.graph();
        return g.red_count() > g.blue_count() ? Color::Blue : Color::Red;
    }
};

class MinimaxPainter final : public PainterPolicy {
public:
    explicit MinimaxPainter(const GameConfig& config) : solver_(checked(config)) {}
    std::string name() const override { return "minimax"; }

    Color choose(const GameState& state, const Pair& p) override {
        const auto red = solver_.value(build_edge(state.graph(), p.u, p.v, Color::Red));
        const auto blue = solver_.value(build_edge(state.graph(), p.u, p.v, Color::Blue));
        if (!red) return Color::Red;
        if (!blue) return Color::Blue;
        return *blue > *red ? Color::Blue : Color::Red;
    }

private:
    static GameConfig checked(const GameConfig& config) {
        if (config.N > kMaxRetrogradeVertices) {
            throw SolverError(SolverError::Code::PositionTooLarge,
                              "minimax painter supports at most " + std::to_string(kMaxRetrogradeVertices) +
                                  " vertices, got " + std::to_string(config.N));
        }
        return config;
    }

    ExactSolver solver_;
};

class ReplayPainter final : public PainterPolicy {
public:
    explicit ReplayPainter(Transcript t) : transcript_(std::move(t)) {}
    std::string name() const override { return "replay"; }

    Color choose(const GameState&, const Pair& p) override {
        if (next_ >= transcript_.moves.size()) {
            throw GameError(GameError::Code::ReplayDivergence,
                            "replay painter asked about (" + std::to_string(p.u) + "," + std::to_string(p.v) +
                                ") after the transcript's last move");
        }
        const auto& expected = transcript_.moves[next_];
        if (!(expected.pair == Pair::of(p.u, p.v))) {
            throw GameError(GameError::Code::ReplayDivergence,
                            "replay painter expected (" + std::to_string(expected.pair.u) + "," +
                                std::to_string(expected.pair.v) + ") at move " + std::to_string(next_ + 1) +
                                ", got (" + std::to_string(p.u) + "," + std::to_string(p.v) + ")");
        }
        ++next_;
        return expected.color;
    }

private:
    Transcript transcript_;
    std::size_t next_ = 0;
};

class ConstantPainter final : public PainterPolicy {
public:
    explicit ConstantPainter(Color c) : color_(c) {}
    std::string name() const override { return color_ == Color::Red ? "red" : "blue"; }
    Color choose(const GameState&, const Pair&) override { return color_; }

private:
    Color color_;
};

class AlternatingPainter final : public PainterPolicy {
public:
    std::string name() const override { return "alternating"; }
    Color choose(const GameState& state, const Pair&) override {
        return state.moves_made() % 2 == 0 ? Color::Red : Color::Blue;
    }
};

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
        seed = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw StrategyError(StrategyError::Code::UnknownPolicy, "bad random painter seed '" + text + "'");
    }
    return seed;
}

}  // namespace

std::unique_ptr<PainterPolicy> random_painter(std::uint64_t seed) { return std::make_unique<RandomPainter>(seed); }
std::unique_ptr<PainterPolicy> greedy_minclique_painter(const GameConfig& config) {
    return std::make_unique<GreedyPainter>(config);
}
std::unique_ptr<PainterPolicy> balanced_painter() { return std::make_unique<BalancedPainter>(); }
std::unique_ptr<PainterPolicy> minimax_painter(const GameConfig& config) {
    return std::make_unique<MinimaxPainter>(config);
}
std::unique_ptr<PainterPolicy> replay_painter(Transcript transcript) {
    return std::make_unique<ReplayPainter>(std::move(transcript));
}
std::unique_ptr<PainterPolicy> constant_painter(Color c) { return std::make_unique<ConstantPainter>(c); }
std::unique_ptr<PainterPolicy> alternating_painter() { return std::make_unique<AlternatingPainter>(); }

std::unique_ptr<PainterPolicy> make_painter(const std::string& spec, const GameConfig& config,
                                            std::uint64_t default_seed) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "random") return random_painter(colon == std::string::npos ? default_seed : parse_seed(arg));
    if (colon == std::string::npos) {
        if (head == "greedy") return greedy_minclique_painter(config);
        if (head == "balanced") return balanced_painter();
        if (head == "minimax") return minimax_painter(config);
        if (head == "red") return constant_painter(Color::Red);
        if (head == "blue") return constant_painter(Color::Blue);
        if (head == "alternating") return alternating_painter();
    }
    if (head == "replay" && !arg.empty()) {
        std::ifstream in(arg);
        if (!in) throw StrategyError(StrategyError::Code::UnknownPolicy, "cannot read transcript '" + arg + "'");
        std::stringstream text;
        text << in.rdbuf();
        auto t = Transcript::parse(text.str());
        if (!(t.config == config)) {
            throw GameError(GameError::Code::InvalidConfig, "transcript '" + arg + "' is for a different game");
        }
        return replay_painter(std::move(t));
    }
    if (head == "remote") {
        throw StrategyError(StrategyError::Code::UnknownPolicy,
                            "remote painters are driven through the session service (`serve`)");
    }
    throw StrategyError(StrategyError::Code::UnknownPolicy, "unknown painter '" + spec + "'");
}

std::vector<std::string> painter_pool() { return {"red", "blue", "alternating", "balanced", "greedy", "random"}; }

}  // namespace ramsey
