#include "ramsey/session.hpp"

#include <fstream>
#include <random>
#include <regex>

#include "httplib.h"

#include "ramsey/builders.hpp"
#include "ramsey/painters.hpp"

namespace ramsey {

const char* session_error_name(SessionError::Code code) {
    switch (code) {
        case SessionError::Code::UnknownPolicy: return "UnknownPolicy";
        case SessionError::Code::InvalidConfig: return "InvalidConfig";
        case SessionError::Code::WrongTurn: return "WrongTurn";
        case SessionError::Code::IllegalEdge: return "IllegalEdge";
        case SessionError::Code::SessionFinished: return "SessionFinished";
        case SessionError::Code::UnknownSession: return "UnknownSession";
        case SessionError::Code::NotFinished: return "NotFinished";
        case SessionError::Code::BadRequest: return "BadRequest";
    }
    return "Unknown";
}

int session_error_status(SessionError::Code code) {
    switch (code) {
        case SessionError::Code::UnknownSession: return 404;
        case SessionError::Code::WrongTurn:
        case SessionError::Code::SessionFinished:
        case SessionError::Code::NotFinished: return 409;
        case SessionError::Code::IllegalEdge: return 422;
        default: return 400;
    }
}

const char* phase_name(SessionPhase phase) {
    switch (phase) {
        case SessionPhase::AwaitingBuilderMove: return "AwaitingBuilderMove";
        case SessionPhase::AwaitingPainterChoice: return "AwaitingPainterChoice";
        case SessionPhase::Finished: return "Finished";
    }
    return "Finished";
}

struct SessionManager::Session {
    std::string id;
    Role human;
    GameState game;
    std::unique_ptr<BuilderPolicy> builder;  // engine side when the human paints
    std::unique_ptr<PainterPolicy> painter;  // engine side when the human builds
    SessionPhase phase = SessionPhase::AwaitingBuilderMove;
    std::optional<Pair> pending;
    Clock::time_point touched;
    std::mutex mutex;

    Session(std::string id_, Role human_, GameConfig config) : id(std::move(id_)), human(human_), game(config) {}

    // Engine builder proposes the next pair, or the game is over.
    void advance_engine_builder() {
        if (game.finished()) {
            phase = SessionPhase::Finished;
            pending.reset();
            return;
        }
        const auto move = builder->next_move(game);
        const auto& g = game.graph();
        const int N = game.config().N;
        if (!move || move->u < 0 || move->v < 0 || move->u >= N || move->v >= N || move->u == move->v ||
            g.is_built(move->u, move->v)) {
            throw GameError(GameError::Code::IllegalBuilderMove, "engine builder produced no legal move");
        }
        pending = Pair::of(move->u, move->v);
        phase = SessionPhase::AwaitingPainterChoice;
    }

    nlohmann::json public_state() const {
        const auto& g = game.graph();
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : g.built_edges()) {
            edges.push_back({e.pair.u, e.pair.v, std::string(1, color_letter(e.color))});
        }
        const auto& cfg = game.config();
        nlohmann::json out = {
            {"v", kProtocolVersion},
            {"id", id},
            {"config", {{"m", cfg.m}, {"n", cfg.n}, {"N", cfg.N}}},
            {"human", human == Role::Painter ? "painter" : "builder"},
            {"edges", edges},
            {"state", phase_name(phase)},
            {"status", game.status().label()},
            {"moves", game.moves_made()},
            {"savings", game.savings()},
        };
        out["pending_edge"] = pending ? nlohmann::json{pending->u, pending->v} : nlohmann::json(nullptr);
        out["witness"] = game.status().outcome == GameOutcome::BuilderWon ? nlohmann::json(game.status().clique)
                                                                           : nlohmann::json(nullptr);
        return out;
    }
};

SessionManager::SessionManager() : SessionManager(Options{}) {}

SessionManager::SessionManager(Options options) : options_(std::move(options)), salt_(std::random_device{}()) {
    salt_ = (salt_ << 32) ^ std::random_device{}();
}

SessionManager::~SessionManager() = default;

std::string SessionManager::fresh_id() {
    std::mt19937_64 mix(salt_ ^ (++counter_ * 0x9e3779b97f4a7c15ULL));
    static constexpr char hex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 16; ++i) id.push_back(hex[mix() & 15U]);
    return id;
}

std::string SessionManager::create(const SessionRequest& request) {
    try {
        request.config.validate();
    } catch (const GameError& e) {
        throw SessionError(SessionError::Code::InvalidConfig, e.what());
    }
    std::shared_ptr<Session> s;
    {
        const std::lock_guard lock(mutex_);
        s = std::make_shared<Session>(fresh_id(), request.human, request.config);
    }
    try {
        if (request.human == Role::Painter) {
            s->builder = make_builder(request.engine_policy, request.config, request.overrides);
        } else {
            if (!request.overrides.empty()) {
                throw StrategyError(StrategyError::Code::InvalidParams, "painters take no parameter overrides");
            }
            s->painter = make_painter(request.engine_policy, request.config, request.seed);
        }
    } catch (const StrategyError& e) {
        throw SessionError(SessionError::Code::UnknownPolicy, e.what());
    } catch (const std::exception& e) {
        throw SessionError(SessionError::Code::UnknownPolicy, e.what());
    }
    if (request.human == Role::Painter) {
        s->advance_engine_builder();
    } else {
        s->phase = SessionPhase::AwaitingBuilderMove;
    }
    s->touched = options_.now();
    expire_idle();
    const std::lock_guard lock(mutex_);
    sessions_.emplace(s->id, s);
    return s->id;
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) {
    expire_idle();
    const std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionError(SessionError::Code::UnknownSession, "no session '" + id + "'");
    return it->second;
}

nlohmann::json SessionManager::state(const std::string& id) {
    const auto s = find(id);
    const std::lock_guard lock(s->mutex);
    s->touched = options_.now();
    return s->public_state();
}

nlohmann::json SessionManager::act(const std::string& id, const Action& action) {
    const auto s = find(id);
    std::unique_lock lock(s->mutex, std::try_to_lock);
    if (!lock.owns_lock()) {
        throw SessionError(SessionError::Code::WrongTurn, "another action on this session is in progress");
    }
    s->touched = options_.now();
    if (s->phase == SessionPhase::Finished) {
        throw SessionError(SessionError::Code::SessionFinished, "session is finished: " + s->game.status().label());
    }

    if (const auto* color = std::get_if<Color>(&action)) {
        if (s->phase != SessionPhase::AwaitingPainterChoice || s->human != Role::Painter) {
            throw SessionError(SessionError::Code::WrongTurn, "not waiting for a color");
        }
        const Pair p = *s->pending;
        s->game.apply(p, *color);
        s->builder->observe(s->game, {p, *color});
        s->pending.reset();
        s->advance_engine_builder();
    } else {
        const Pair& raw = std::get<Pair>(action);
        if (s->phase != SessionPhase::AwaitingBuilderMove || s->human != Role::Builder) {
            throw SessionError(SessionError::Code::WrongTurn, "not waiting for an edge");
        }
        const int N = s->game.config().N;
        if (raw.u < 0 || raw.v < 0 || raw.u >= N || raw.v >= N || raw.u == raw.v) {
            throw SessionError(SessionError::Code::IllegalEdge, "edge endpoints must be distinct vertices in range");
        }
        const Pair p = Pair::of(raw.u, raw.v);
        if (s->game.graph().is_built(p.u, p.v)) {
            throw SessionError(SessionError::Code::IllegalEdge,
                               "pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ") is already built");
        }
        const Color c = s->painter->choose(s->game, p);
        s->game.apply(p, c);
        s->phase = s->game.finished() ? SessionPhase::Finished : SessionPhase::AwaitingBuilderMove;
    }

    if (s->phase == SessionPhase::Finished && options_.transcript_dir) {
        std::filesystem::create_directories(*options_.transcript_dir);
        std::ofstream(*options_.transcript_dir / (s->id + ".txt")) << Transcript::of(s->game).serialize();
    }
    return s->public_state();
}

std::string SessionManager::transcript(const std::string& id) {
    const auto s = find(id);
    const std::lock_guard lock(s->mutex);
    s->touched = options_.now();
    if (s->phase != SessionPhase::Finished) {
        throw SessionError(SessionError::Code::NotFinished, "transcript is available once the game is finished");
    }
    return Transcript::of(s->game).serialize();
}

std::size_t SessionManager::expire_idle() {
    const auto now = options_.now();
    const std::lock_guard lock(mutex_);
    return std::erase_if(sessions_, [&](const auto& entry) {
        std::unique_lock session_lock(entry.second->mutex, std::try_to_lock);
        return session_lock.owns_lock() && now - entry.second->touched > options_.idle_expiry;
    });
}

std::size_t SessionManager::size() const {
    const std::lock_guard lock(mutex_);
    return sessions_.size();
}

// ---------------------------------------------------------------------------

namespace {

void check_version(const nlohmann::json& body) {
    if (!body.is_object()) throw SessionError(SessionError::Code::BadRequest, "body must be a JSON object");
    if (body.contains("v") && body["v"] != kProtocolVersion) {
        throw SessionError(SessionError::Code::BadRequest,
                           "unsupported protocol version " + body["v"].dump() + ", expected " +
                               std::to_string(kProtocolVersion));
    }
}

}  // namespace

SessionRequest parse_session_request(const nlohmann::json& body) {
    check_version(body);
    SessionRequest r;
    try {
        const auto& cfg = body.at("config");
        r.config = {cfg.at("m").get<int>(), cfg.at("n").get<int>(), cfg.at("N").get<int>()};
        const auto human = body.value("human", std::string("painter"));
        if (human != "painter" && human != "builder") {
            throw SessionError(SessionError::Code::BadRequest, "human must be \"painter\" or \"builder\"");
        }
        r.human = human == "painter" ? Role::Painter : Role::Builder;
        r.engine_policy = body.value("policy", std::string(r.human == Role::Painter ? "paper" : "greedy"));
        if (body.contains("overrides")) r.overrides = body["overrides"].get<std::vector<std::string>>();
        r.seed = body.value("seed", std::uint64_t{0});
    } catch (const nlohmann::json::exception& e) {
        throw SessionError(SessionError::Code::BadRequest, std::string("malformed session request: ") + e.what());
    }
    return r;
}

Action parse_action(const nlohmann::json& body) {
    check_version(body);
    try {
        if (body.contains("color") == body.contains("edge")) {
            throw SessionError(SessionError::Code::BadRequest, "an action carries exactly one of color or edge");
        }
        if (body.contains("color")) {
            const auto c = body["color"].get<std::string>();
            if (c != "R" && c != "B") throw SessionError(SessionError::Code::BadRequest, "color must be \"R\" or \"B\"");
            return c == "R" ? Color::Red : Color::Blue;
        }
        const auto& e = body["edge"];
        if (!e.is_array() || e.size() != 2) {
            throw SessionError(SessionError::Code::BadRequest, "edge must be [u, v]");
        }
        return Pair{e[0].get<int>(), e[1].get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw SessionError(SessionError::Code::BadRequest, std::string("malformed action: ") + e.what());
    }
}

ApiResponse handle_request(SessionManager& manager, const std::string& method, const std::string& path,
                           const std::string& body) {
    static const std::regex session_path(R"(^/sessions/([0-9a-f]+)(/actions|/transcript)?$)");
    const auto json_response = [](int status, const nlohmann::json& j) { return ApiResponse{status, "application/json", j.dump()}; };
    const auto parse_body = [&] {
        auto j = nlohmann::json::parse(body, nullptr, false);
        if (j.is_discarded()) throw SessionError(SessionError::Code::BadRequest, "body is not valid JSON");
        return j;
    };
    try {
        if (path == "/sessions") {
            if (method != "POST") return json_response(405, {{"v", kProtocolVersion}, {"error", "MethodNotAllowed"}});
            const auto id = manager.create(parse_session_request(parse_body()));
            return json_response(201, manager.state(id));
        }
        std::smatch match;
        if (!std::regex_match(path, match, session_path)) {
            return json_response(404, {{"v", kProtocolVersion}, {"error", "NotFound"}, {"message", "no route " + path}});
        }
        const std::string id = match[1];
        const std::string tail = match[2];
        if (tail.empty() && method == "GET") return json_response(200, manager.state(id));
        if (tail == "/actions" && method == "POST") return json_response(200, manager.act(id, parse_action(parse_body())));
        if (tail == "/transcript" && method == "GET") return {200, "text/plain", manager.transcript(id)};
        return json_response(405, {{"v", kProtocolVersion}, {"error", "MethodNotAllowed"}});
    } catch (const SessionError& e) {
        return json_response(session_error_status(e.code()),
                             {{"v", kProtocolVersion}, {"error", session_error_name(e.code())}, {"message", e.what()}});
    } catch (const std::exception& e) {
        return json_response(500, {{"v", kProtocolVersion}, {"error", "Internal"}, {"message", e.what()}});
    }
}

void register_routes(httplib::Server& server, SessionManager& manager) {
    const auto bind = [&manager](const std::string& method) {
        return [&manager, method](const httplib::Request& req, httplib::Response& res) {
            const auto out = handle_request(manager, method, req.path, req.body);
            res.status = out.status;
            res.set_content(out.body, out.content_type);
        };
    };
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Post(R"(/sessions.*)", bind("POST"));
    server.Get(R"(/sessions.*)", bind("GET"));
    server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

}  // namespace ramsey
