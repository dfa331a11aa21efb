#include "ramsey/game.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/clique.hpp"

namespace ramsey {

void GameConfig::validate() const {
    if (m < 2 || n < 2) throw GameError(GameError::Code::InvalidConfig, "clique targets must be at least 2");
    if (N < 2) throw GameError(GameError::Code::InvalidConfig, "need at least 2 vertices");
}

std::string GameStatus::label() const {
    switch (outcome) {
        case GameOutcome::BuilderWon: return *color == Color::Red ? "RED_WIN" : "BLUE_WIN";
        case GameOutcome::Stalemate: return "STALEMATE";
        case GameOutcome::InProgress: break;
    }
    return "IN_PROGRESS";
}

GameState::GameState(GameConfig config, std::optional<BichromaticGraph> seed)
    : config_(config), seed_(std::move(seed)), graph_(config.N >= 1 ? config.N : 1) {
    config_.validate();
    if (seed_) {
        if (seed_->vertex_count() != config_.N) {
            throw GameError(GameError::Code::InvalidConfig, "seed graph vertex count does not match N");
        }
        graph_ = *seed_;
    }
    refresh_from_scratch();
}

void GameState::refresh_from_scratch() {
    for (const Color c : {Color::Red, Color::Blue}) {
        if (auto clique = find_mono_clique(graph_, c, config_.target(c))) {
            status_ = {GameOutcome::BuilderWon, c, std::move(*clique)};
            return;
        }
    }
    status_ = {};
    if (graph_.unbuilt_count() == 0) status_.outcome = GameOutcome::Stalemate;
}

void GameState::apply(const Pair& p, Color c) {
    if (finished()) throw GameError(GameError::Code::GameFinished, "game already finished: " + status_.label());
    graph_.build(p, c);
    moves_.push_back({Pair::of(p.u, p.v), c});
    if (auto clique = incremental_clique_check(graph_, Pair::of(p.u, p.v), c, config_.target(c))) {
        status_ = {GameOutcome::BuilderWon, c, std::move(*clique)};
    } else if (graph_.unbuilt_count() == 0) {
        status_.outcome = GameOutcome::Stalemate;
    }
}

// ---------------------------------------------------------------------------

nlohmann::json StrategyReport::to_json(const GameStatus& status) const {
    nlohmann::json phases = nlohmann::json::array();
    for (const auto& p : phase_log) phases.push_back({{"name", p.name}, {"moves", p.moves}, {"witness", p.witness}});
    nlohmann::json out = {{"status", status.label()}, {"moves", moves_used}, {"savings", savings}, {"phases", phases}};
    if (status.outcome == GameOutcome::BuilderWon) out["witness"] = status.clique;
    if (pairwise) {
        out["pairwise"] = {{"p", pairwise->p_size},
                           {"q", pairwise->q_size},
                           {"larger_family_touched", pairwise->larger_family_touched}};
    }
    return out;
}

namespace {

void append_edge(std::string& out, const ColoredEdge& e) {
    out += std::to_string(e.pair.u) + " " + std::to_string(e.pair.v) + " " + color_letter(e.color) + "\n";
}

[[noreturn]] void transcript_fail(std::size_t line, const std::string& why) {
    throw GameError(GameError::Code::Parse, "transcript line " + std::to_string(line) + ": " + why);
}

ColoredEdge parse_edge(const std::string& line, std::size_t line_no) {
    std::istringstream in(line);
    Vertex u = 0;
    Vertex v = 0;
    std::string c;
    std::string extra;
    if (!(in >> u >> v >> c) || (in >> extra) || (c != "R" && c != "B")) transcript_fail(line_no, "expected `u v R|B`");
    return {Pair::of(u, v), c == "R" ? Color::Red : Color::Blue};
}

}  // namespace

std::string Transcript::serialize() const {
    std::string out = std::to_string(config.m) + " " + std::to_string(config.n) + " " + std::to_string(config.N) + "\n";
    if (seed) {
        const auto edges = seed->built_edges();
        out += "SEED " + std::to_string(edges.size()) + "\n";
        for (const auto& e : edges) append_edge(out, e);
    }
    for (const auto& e : moves) append_edge(out, e);
    out += "RESULT " + status.label() + " moves=" + std::to_string(moves.size()) +
           " savings=" + std::to_string(savings) + "\n";
    return out;
}

Transcript Transcript::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() < 2) transcript_fail(lines.size(), "transcript needs a header and a RESULT line");

    Transcript t;
    {
        std::istringstream header(lines[0]);
        std::string extra;
        if (!(header >> t.config.m >> t.config.n >> t.config.N) || (header >> extra)) {
            transcript_fail(1, "expected `m n N`");
        }
        t.config.validate();
    }
    std::size_t i = 1;
    if (lines[i].rfind("SEED", 0) == 0) {
        std::istringstream seed_line(lines[i]);
        std::string tag;
        std::size_t k = 0;
        if (!(seed_line >> tag >> k) || tag != "SEED") transcript_fail(i + 1, "expected `SEED k`");
        BichromaticGraph seed(t.config.N);
        for (std::size_t j = 0; j < k; ++j) {
            ++i;
            if (i >= lines.size()) transcript_fail(i, "truncated seed block");
            const auto e = parse_edge(lines[i], i + 1);
            seed.build(e.pair, e.color);
        }
        t.seed = std::move(seed);
        ++i;
    }
    for (; i + 1 < lines.size(); ++i) t.moves.push_back(parse_edge(lines[i], i + 1));

    std::istringstream result(lines.back());
    std::string tag;
    std::string label;
    std::string moves_field;
    std::string savings_field;
    if (!(result >> tag >> label >> moves_field >> savings_field) || tag != "RESULT" ||
        moves_field.rfind("moves=", 0) != 0 || savings_field.rfind("savings=", 0) != 0) {
        transcript_fail(lines.size(), "expected `RESULT <status> moves=<k> savings=<s>`");
    }
    if (label == "RED_WIN") {
        t.status = {GameOutcome::BuilderWon, Color::Red, {}};
    } else if (label == "BLUE_WIN") {
        t.status = {GameOutcome::BuilderWon, Color::Blue, {}};
    } else if (label == "STALEMATE") {
        t.status.outcome = GameOutcome::Stalemate;
    } else if (label != "IN_PROGRESS") {
        transcript_fail(lines.size(), "unknown status " + label);
    }
    if (std::stoul(moves_field.substr(6)) != t.moves.size()) {
        transcript_fail(lines.size(), "move count does not match the move lines");
    }
    t.savings = std::stoul(savings_field.substr(8));
    return t;
}

GameState Transcript::replay() const {
    GameState state(config, seed);
    for (const auto& e : moves) state.apply(e.pair, e.color);
    if (state.status().label() != status.label() || state.savings() != savings) {
        throw GameError(GameError::Code::ReplayDivergence,
                        "replay ended with " + state.status().label() + " savings=" + std::to_string(state.savings()) +
                            ", transcript says " + status.label() + " savings=" + std::to_string(savings));
    }
    return state;
}

Transcript Transcript::of(const GameState& state) {
    return {state.config(), state.seed(), state.moves(), state.status(), state.savings()};
}

// ---------------------------------------------------------------------------

PlayResult play(const GameConfig& config, BuilderPolicy& builder, PainterPolicy& painter,
                const std::optional<BichromaticGraph>& seed) {
    GameState state(config, seed);
    while (!state.finished()) {
        const auto move = builder.next_move(state);
        if (!move) {
            throw GameError(GameError::Code::PolicyExhausted,
                            "builder '" + builder.name() + "' yielded no move with " +
                                std::to_string(state.graph().unbuilt_count()) + " pairs unbuilt");
        }
        const auto& g = state.graph();
        const bool in_range = move->u >= 0 && move->v >= 0 && move->u < config.N && move->v < config.N;
        if (!in_range || move->u == move->v || g.is_built(move->u, move->v)) {
            throw GameError(GameError::Code::IllegalBuilderMove,
                            "builder '" + builder.name() + "' proposed illegal pair (" + std::to_string(move->u) +
                                "," + std::to_string(move->v) + ") at move " +
                                std::to_string(state.moves_made() + 1));
        }
        const Pair p = Pair::of(move->u, move->v);
        const Color c = painter.choose(state, p);
        state.apply(p, c);
        builder.observe(state, {p, c});
    }
    StrategyReport report{state.moves_made(), state.savings(), builder.phase_log(), builder.pairwise()};
    return {Transcript::of(state), std::move(report), std::move(state)};
}

bool savings_lower_bound_check(const StrategyReport& report, std::size_t s, std::size_t t) {
    return report.savings >= std::min(s, t);
}

}  // namespace ramsey
