#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "ramsey/game.hpp"

namespace httplib {
class Server;
}

namespace ramsey {

inline constexpr int kProtocolVersion = 1;

class SessionError : public std::runtime_error {
public:
    enum class Code { UnknownPolicy, InvalidConfig, WrongTurn, IllegalEdge, SessionFinished, UnknownSession, NotFinished,
                      BadRequest };
    SessionError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

const char* session_error_name(SessionError::Code code);
int session_error_status(SessionError::Code code);

enum class Role { Builder, Painter };
enum class SessionPhase { AwaitingBuilderMove, AwaitingPainterChoice, Finished };

const char* phase_name(SessionPhase phase);

struct SessionRequest {
    GameConfig config;
    Role human = Role::Painter;
    // Builder name when the human paints, painter spec when the human builds.
    std::string engine_policy;
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
};

using Action = std::variant<Color, Pair>;

class SessionManager {
public:
    using Clock = std::chrono::steady_clock;

    struct Options {
        std::chrono::seconds idle_expiry{30 * 60};
        // Finished games are written here as <id>.txt when set.
        std::optional<std::filesystem::path> transcript_dir;
        std::function<Clock::time_point()> now = [] { return Clock::now(); };
    };

    SessionManager();
    explicit SessionManager(Options options);
    ~SessionManager();

    // Returns the new session id.
    std::string create(const SessionRequest& request);
    nlohmann::json state(const std::string& id);
    nlohmann::json act(const std::string& id, const Action& action);
    // Finished sessions only.
    std::string transcript(const std::string& id);

    // Drops sessions idle for longer than the expiry; returns how many.
    std::size_t expire_idle();
    std::size_t size() const;

private:
    struct Session;
    std::shared_ptr<Session> find(const std::string& id);
    std::string fresh_id();

    Options options_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t counter_ = 0;
    std::uint64_t salt_;
};

// Request bodies: POST /sessions takes {v, config{m,n,N}, human: "painter"|
// "builder", policy, overrides?, seed?}; actions are {v, color: "R"|"B"} or
// {v, edge: [u, v]}.
SessionRequest parse_session_request(const nlohmann::json& body);
Action parse_action(const nlohmann::json& body);

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

// The HTTP surface without sockets: method, path and body in, response out.
ApiResponse handle_request(SessionManager& manager, const std::string& method, const std::string& path,
                           const std::string& body);

void register_routes(httplib::Server& server, SessionManager& manager);

}  // namespace ramsey
