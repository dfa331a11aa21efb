#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ramsey/game.hpp"
#include "ramsey/solver.hpp"

namespace ramsey {

// Independent 64-bit stream derived from the run seed and a component name.
std::uint64_t substream(std::uint64_t seed, std::string_view name);

struct RunConfig {
    GameConfig config;
    std::string builder = "paper";
    std::vector<std::string> builder_overrides;
    std::string painter = "random";
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> from;

    nlohmann::json to_json() const;
};

std::optional<BichromaticGraph> load_graph(const std::optional<std::filesystem::path>& path);

struct GameRun {
    PlayResult result;
    nlohmann::json report;  // one JSON object: status, moves, savings, phases, run config
};

// Validates everything before any move is made; throws GameError,
// StrategyError or GraphError on bad input.
GameRun run_game(const RunConfig& cfg);

// <stem>.txt (transcript) and <stem>.json (report) inside `dir`.
std::pair<std::filesystem::path, std::filesystem::path> write_run_files(const RunConfig& cfg, const GameRun& run,
                                                                        const std::filesystem::path& dir);

struct SweepConfig {
    int m = 3;
    int n = 3;
    int n_min = 6;
    int n_max = 30;
    std::string builder = "paper";
    std::vector<std::string> builder_overrides;
    std::vector<std::string> painters{"random"};
    int seeds = 50;
    std::uint64_t base_seed = 0;
    unsigned jobs = 0;  // 0: hardware concurrency
};

// CSV with header `kind,N,painter,seed,moves,savings`: one `run` row per
// game (painter `random` runs once per seed, the others once per N), then one
// `median` row per (N, painter).
std::string savings_sweep(const SweepConfig& cfg);

nlohmann::json solve_json(const GameConfig& config, const std::optional<BichromaticGraph>& from, bool oracle,
                          SolverOptions options = {});

nlohmann::json lab_kst(long m, long n, long s, long t);
nlohmann::json lab_es(const std::filesystem::path& graph_file);
// Left class: the first half of the vertices; right class: the rest.
nlohmann::json lab_density(const std::filesystem::path& graph_file, const std::string& eps);

// Runs the property suite, one `PASS|FAIL <name>: <detail>` line per item.
bool verify_all(bool quick, std::ostream& out);

}  // namespace ramsey
