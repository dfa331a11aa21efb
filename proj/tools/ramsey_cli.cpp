#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"

#include "ramsey/builders.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/painters.hpp"
#include "ramsey/session.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::filesystem::path default_out_dir() {
    const char* env = std::getenv("RAMSEY_OUT_DIR");
    return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(".");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online Ramsey game workbench"};
    app.require_subcommand(1);

    ramsey::RunConfig play_cfg;
    std::string play_out;
    std::string play_from;
    auto* play = app.add_subcommand("play", "Play one game and write its transcript and report");
    play->add_option("--m", play_cfg.config.m, "Red clique target")->required();
    play->add_option("--n", play_cfg.config.n, "Blue clique target")->required();
    play->add_option("--N", play_cfg.config.N, "Vertex count")->required();
    play->add_option("--builder", play_cfg.builder, "naive | paper | forced-edge");
    play->add_option("--param", play_cfg.builder_overrides, "Builder override such as C=4 or eps=1/8");
    play->add_option("--painter", play_cfg.painter,
                     "random[:seed] | greedy | balanced | minimax | replay:<file> | red | blue | alternating");
    play->add_option("--seed", play_cfg.seed, "Run seed");
    play->add_option("--from", play_from, "Seed graph file");
    play->add_option("--out", play_out, "Output directory (default $RAMSEY_OUT_DIR or .)");

    int solve_m = 0;
    int solve_n = 0;
    int solve_N = 0;
    std::string solve_from;
    bool solve_oracle = false;
    std::size_t solve_budget = ramsey::SolverOptions{}.node_budget;
    auto* solve = app.add_subcommand("solve", "Exact game value from a position");
    solve->add_option("m", solve_m)->required();
    solve->add_option("n", solve_n)->required();
    solve->add_option("N", solve_N)->required();
    solve->add_option("--from", solve_from, "Start graph file");
    solve->add_flag("--oracle", solve_oracle, "Cross-check with the brute-force oracle (N <= 6)");
    solve->add_option("--budget", solve_budget, "Node budget");

    ramsey::SweepConfig sweep_cfg;
    std::string sweep_painters = "random";
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Savings sweep over N and painters as CSV");
    sweep->add_option("--m", sweep_cfg.m);
    sweep->add_option("--n", sweep_cfg.n);
    sweep->add_option("--N-min", sweep_cfg.n_min);
    sweep->add_option("--N-max", sweep_cfg.n_max);
    sweep->add_option("--builder", sweep_cfg.builder);
    sweep->add_option("--param", sweep_cfg.builder_overrides);
    sweep->add_option("--painters", sweep_painters, "Comma-separated painter specs");
    sweep->add_option("--seeds", sweep_cfg.seeds, "Seeds per random painter");
    sweep->add_option("--seed", sweep_cfg.base_seed, "First seed");
    sweep->add_option("--jobs", sweep_cfg.jobs, "Worker threads (0 = all cores)");
    sweep->add_option("--out", sweep_out, "CSV file (default stdout)");

    auto* lab = app.add_subcommand("lab", "Extremal bound tools");
    lab->require_subcommand(1);
    std::vector<long> kst_args;
    auto* kst = lab->add_subcommand("kst", "Kovari-Sos-Turan bound for m n s t");
    kst->add_option("args", kst_args)->expected(4)->required();
    std::string es_file;
    auto* es = lab->add_subcommand("es", "Largest clique or independent set");
    es->add_option("graph", es_file)->required()->check(CLI::ExistingFile);
    std::string density_file;
    std::string density_eps = "1/10";
    auto* density = lab->add_subcommand("density", "Incidence-density witness for a balanced bipartite graph");
    density->add_option("graph", density_file)->required()->check(CLI::ExistingFile);
    density->add_option("--eps", density_eps);

    bool verify_quick = false;
    auto* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_flag("--quick", verify_quick, "Reduced sizes");

    std::string serve_host = "127.0.0.1";
    int serve_port = 8080;
    int serve_expiry = 30 * 60;
    std::string serve_transcripts;
    auto* serve = app.add_subcommand("serve", "Start the interactive session service");
    serve->add_option("--host", serve_host);
    serve->add_option("--port", serve_port);
    serve->add_option("--idle-expiry", serve_expiry, "Seconds");
    serve->add_option("--transcripts", serve_transcripts, "Directory for finished transcripts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) {
            if (!play_from.empty()) play_cfg.from = play_from;
            const auto run = ramsey::run_game(play_cfg);
            ramsey::write_run_files(play_cfg, run, play_out.empty() ? default_out_dir() : std::filesystem::path(play_out));
            std::cout << run.report.dump() << "\n";
        } else if (*solve) {
            const ramsey::GameConfig cfg{solve_m, solve_n, solve_N};
            const auto from = ramsey::load_graph(solve_from.empty() ? std::nullopt
                                                                     : std::optional<std::filesystem::path>(solve_from));
            std::cout << ramsey::solve_json(cfg, from, solve_oracle, {solve_budget}).dump() << "\n";
        } else if (*sweep) {
            sweep_cfg.painters = split_commas(sweep_painters);
            const auto csv = ramsey::savings_sweep(sweep_cfg);
            if (sweep_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream(sweep_out) << csv;
            }
        } else if (*lab) {
            if (*kst) {
                std::cout << ramsey::lab_kst(kst_args[0], kst_args[1], kst_args[2], kst_args[3]).dump() << "\n";
            } else if (*es) {
                std::cout << ramsey::lab_es(es_file).dump() << "\n";
            } else {
                std::cout << ramsey::lab_density(density_file, density_eps).dump() << "\n";
            }
        } else if (*verify) {
            return ramsey::verify_all(verify_quick, std::cout) ? 0 : 1;
        } else if (*serve) {
            ramsey::SessionManager::Options options;
            options.idle_expiry = std::chrono::seconds(serve_expiry);
            if (!serve_transcripts.empty()) options.transcript_dir = serve_transcripts;
            ramsey::SessionManager manager(options);
            httplib::Server server;
            ramsey::register_routes(server, manager);
            std::cerr << "listening on http://" << serve_host << ":" << serve_port << "\n";
            if (!server.listen(serve_host, serve_port)) {
                std::cerr << "error: cannot listen on " << serve_host << ":" << serve_port << "\n";
                return 1;
            }
        }
    } catch (const ramsey::SolverError& e) {
        std::cerr << "error: " << e.what() << " (bounds " << e.lower_bound() << ".." << e.upper_bound() << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
