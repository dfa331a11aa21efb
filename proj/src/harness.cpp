#include "ramsey/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ramsey/builders.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/painters.hpp"

namespace ramsey {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(GraphError::Code::Parse, "cannot read " + path.string());
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string file_safe(const std::string& s) {
    std::string out;
    for (const char c : s) out.push_back(std::isalnum(static_cast<unsigned char>(c)) != 0 ? c : '-');
    return out;
}

nlohmann::json config_json(const GameConfig& c) { return {{"m", c.m}, {"n", c.n}, {"N", c.N}}; }

nlohmann::json edges_json(const std::vector<ColoredEdge>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : edges) out.push_back({e.pair.u, e.pair.v, std::string(1, color_letter(e.color))});
    return out;
}

std::string median_text(std::vector<std::size_t> values) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    const std::size_t twice = k % 2 == 1 ? 2 * values[k / 2] : values[k / 2 - 1] + values[k / 2];
    return std::to_string(twice / 2) + (twice % 2 == 1 ? ".5" : "");
}

}  // namespace

std::uint64_t substream(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(seed ^ splitmix64(h));
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json out = {{"config", config_json(config)},
                          {"builder", builder},
                          {"builder_overrides", builder_overrides},
                          {"painter", painter},
                          {"seed", seed}};
    if (from) out["from"] = from->string();
    return out;
}

std::optional<BichromaticGraph> load_graph(const std::optional<std::filesystem::path>& path) {
    if (!path) return std::nullopt;
    return BichromaticGraph::parse(read_file(*path));
}

GameRun run_game(const RunConfig& cfg) {
    cfg.config.validate();
    auto seed_graph = load_graph(cfg.from);
    if (seed_graph && seed_graph->vertex_count() != cfg.config.N) {
        throw GameError(GameError::Code::InvalidConfig, "seed graph has " + std::to_string(seed_graph->vertex_count()) +
                                                            " vertices, expected " + std::to_string(cfg.config.N));
    }
    auto builder = make_builder(cfg.builder, cfg.config, cfg.builder_overrides);
    auto painter = make_painter(cfg.painter, cfg.config, substream(cfg.seed, "painter"));
    auto result = play(cfg.config, *builder, *painter, seed_graph);
    auto report = result.report.to_json(result.final_state.status());
    report["run"] = cfg.to_json();
    report["painter_name"] = painter->name();
    return {std::move(result), std::move(report)};
}

std::pair<std::filesystem::path, std::filesystem::path> write_run_files(const RunConfig& cfg, const GameRun& run,
                                                                        const std::filesystem::path& dir) {
    const auto& c = cfg.config;
    const std::string stem = "play_" + std::to_string(c.m) + "_" + std::to_string(c.n) + "_" + std::to_string(c.N) +
                             "_" + file_safe(cfg.builder) + "_" + file_safe(cfg.painter) + "_" + std::to_string(cfg.seed);
    std::filesystem::create_directories(dir);
    const auto transcript = dir / (stem + ".txt");
    const auto report = dir / (stem + ".json");
    std::ofstream(transcript) << run.result.transcript.serialize();
    std::ofstream(report) << run.report.dump() << "\n";
    return {transcript, report};
}

// ---------------------------------------------------------------------------

std::string savings_sweep(const SweepConfig& cfg) {
    struct Cell {
        int N;
        std::string painter;
        std::uint64_t seed;
        std::size_t moves = 0;
        std::size_t savings = 0;
    };
    std::vector<Cell> cells;
    for (int N = cfg.n_min; N <= cfg.n_max; ++N) {
        for (const auto& p : cfg.painters) {
            const int repeats = p == "random" ? cfg.seeds : 1;
            for (int s = 0; s < repeats; ++s) cells.push_back({N, p, cfg.base_seed + static_cast<std::uint64_t>(s)});
        }
    }
    // Validate once up front so a bad name fails before any work starts.
    make_builder(cfg.builder, {cfg.m, cfg.n, std::max(cfg.n_min, 2)}, cfg.builder_overrides);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                auto& cell = cells[i];
                RunConfig rc{{cfg.m, cfg.n, cell.N}, cfg.builder, cfg.builder_overrides, cell.painter, cell.seed, {}};
                const auto run = run_game(rc);
                cell.moves = run.result.report.moves_used;
                cell.savings = run.result.report.savings;
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1U, cfg.jobs != 0 ? cfg.jobs : std::thread::hardware_concurrency());
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    std::string csv = "kind,N,painter,seed,moves,savings\n";
    for (const auto& c : cells) {
        csv += "run," + std::to_string(c.N) + "," + c.painter + "," + std::to_string(c.seed) + "," +
               std::to_string(c.moves) + "," + std::to_string(c.savings) + "\n";
    }
    for (int N = cfg.n_min; N <= cfg.n_max; ++N) {
        for (const auto& p : cfg.painters) {
            std::vector<std::size_t> moves;
            std::vector<std::size_t> savings;
            for (const auto& c : cells) {
                if (c.N == N && c.painter == p) {
                    moves.push_back(c.moves);
                    savings.push_back(c.savings);
                }
            }
            if (moves.empty()) continue;
            csv += "median," + std::to_string(N) + "," + p + ",," + median_text(moves) + "," + median_text(savings) + "\n";
        }
    }
    return csv;
}

// ---------------------------------------------------------------------------

nlohmann::json solve_json(const GameConfig& config, const std::optional<BichromaticGraph>& from, bool oracle,
                          SolverOptions options) {
    config.validate();
    const BichromaticGraph start = from ? *from : BichromaticGraph(config.N);
    if (start.vertex_count() != config.N) {
        throw GameError(GameError::Code::InvalidConfig, "start graph vertex count does not match N");
    }
    ExactSolver solver(config, options);
    const auto result = solver.solve(start);
    nlohmann::json out = {{"config", config_json(config)},
                          {"built", start.built_count()},
                          {"value", result.value ? nlohmann::json(*result.value) : nlohmann::json(nullptr)},
                          {"pv", edges_json(result.principal_variation)},
                          {"nodes", result.nodes_expanded},
                          {"table_hits", result.table_hits},
                          {"table_size", solver.table_size()}};
    if (result.value) {
        out["savings"] = static_cast<std::int64_t>(config.total_pairs()) - static_cast<std::int64_t>(start.built_count()) -
                         *result.value;
    } else {
        out["savings"] = nullptr;
    }
    if (oracle) {
        const auto check = brute_value(start, config);
        out["oracle"] = check ? nlohmann::json(*check) : nlohmann::json(nullptr);
        out["agrees"] = check == result.value;
    }
    return out;
}

nlohmann::json lab_kst(long m, long n, long s, long t) {
    const auto b = kst_bound(m, n, s, t);
    return {{"m", m}, {"n", n}, {"s", s}, {"t", t}, {"bound", b.str()}, {"approx", b.to_double()}};
}

nlohmann::json lab_es(const std::filesystem::path& graph_file) {
    const auto g = SimpleGraph::parse(read_file(graph_file));
    const auto set = es_extract(g);
    const double N = g.vertex_count();
    const double edges = static_cast<double>(g.edge_count());
    nlohmann::json out = {{"N", g.vertex_count()},
                          {"edges", g.edge_count()},
                          {"kind", set.kind == SetKind::Clique ? "clique" : "independent"},
                          {"size", set.vertices.size()},
                          {"vertices", set.vertices}};
    // Empirical constant a with size = a log N / (eps log(1/eps)), eps = e/N^2.
    const double eps = edges / (N * N);
    if (eps > 0 && eps < 1 && N > 1) {
        out["a_estimate"] = static_cast<double>(set.vertices.size()) * eps * std::log(1 / eps) / std::log(N);
    } else {
        out["a_estimate"] = nullptr;
    }
    return out;
}

nlohmann::json lab_density(const std::filesystem::path& graph_file, const std::string& eps_text) {
    const auto g = BichromaticGraph::parse(read_file(graph_file));
    const auto eps = Rational::parse(eps_text);
    const int half = g.vertex_count() / 2;
    VertexSet left;
    VertexSet right;
    for (Vertex v = 0; v < half; ++v) left.push_back(v);
    for (Vertex v = half; v < 2 * half; ++v) right.push_back(v);
    const auto w = verify_least_density(g, left, right, eps);
    return {{"eps", w.eps.str()},
            {"delta", w.delta.str()},
            {"mu", w.mu.str()},
            {"nu", w.nu.str()},
            {"N0", w.n0},
            {"balanced_vertices", w.balanced_vertices},
            {"S_R", w.s_red},
            {"S_B", w.s_blue},
            {"e_HL", w.e_hl},
            {"e_HR", w.e_hr},
            {"dense_incidence", w.dense_incidence},
            {"few_balanced", w.few_balanced},
            {"intermediate_holds", w.intermediate_holds},
            {"classes_cover", w.classes_cover}};
}

}  // namespace ramsey
