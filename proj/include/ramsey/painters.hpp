#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "ramsey/game.hpp"

namespace ramsey {

// Fair coin per query from a seeded mt19937_64 (top bit set means Blue).
std::unique_ptr<PainterPolicy> random_painter(std::uint64_t seed);

// Avoids completing a target clique if it can; otherwise the color whose
// largest clique through the pair is smaller; ties go to the color with fewer
// built edges, then Red.
std::unique_ptr<PainterPolicy> greedy_minclique_painter(const GameConfig& config);

// The minority color over all built edges; Red on a tie.
std::unique_ptr<PainterPolicy> balanced_painter();

// The color with the larger exact remaining-moves value (unwinnable counts as
// largest); Red on a tie. Throws SolverError{PositionTooLarge} for N > 6.
std::unique_ptr<PainterPolicy> minimax_painter(const GameConfig& config);

// Answers with the transcript's colors in order; throws
// GameError{ReplayDivergence} when asked about any other pair.
std::unique_ptr<PainterPolicy> replay_painter(Transcript transcript);

std::unique_ptr<PainterPolicy> constant_painter(Color c);
// Red on even move counts, Blue on odd.
std::unique_ptr<PainterPolicy> alternating_painter();

// `random:<seed>`, `greedy`, `balanced`, `minimax`, `replay:<file>`, `red`,
// `blue`, `alternating`. `remote:<session>` is accepted by the session service
// only. A bare `random` uses `default_seed`.
std::unique_ptr<PainterPolicy> make_painter(const std::string& spec, const GameConfig& config,
                                            std::uint64_t default_seed = 0);

// Names of the deterministic pool plus `random` (used by sweeps and tests).
std::vector<std::string> painter_pool();

}  // namespace ramsey
