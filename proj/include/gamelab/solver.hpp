#pragma once

#include <optional>
#include <vector>

#include "gamelab/game.hpp"

namespace gamelab {
namespace solver {

// Completion-form game for exact search: the completer wins by owning every
// element of some set; the other side wins otherwise (no draws). Transversal
// games (connectivity) enter with completer = Breaker and the hostile family.
struct SolveInput {
    int board_size = 0;
    std::vector<Bits> sets;
    Player completer = Player::Maker;
    int maker_bias = 1;
    int breaker_bias = 1;
    Player first = Player::Maker;
    std::optional<Bits> playable;
};

struct SolveResult {
    Player winner = Player::Breaker;
    std::optional<int> principal_move;
    long long nodes = 0;
    bool cached = false;
};

struct SolverLimits {
    int board_max = 16;
};

SolveResult solve(const SolveInput& input, const SolverLimits& limits = {},
                  bool use_cache = true);

// A move for the side to move that preserves its game value; lowest index on
// ties.
int best_move(const SolveInput& input, const Bits& maker, const Bits& breaker,
              Player to_move, int taken_this_turn, const SolverLimits& limits = {});

// Expands a playable game into completion form. Oracle families are
// materialized on the small board: connectivity becomes the cut family with
// Breaker as completer, matchings/cycles/cliques are enumerated explicitly.
SolveInput make_solver_input(const BiasedGame& game, const Graph* board_graph);

struct VerifyResult {
    bool ok = true;
    std::vector<Move> counterexample;
};

// True iff the strategy wins against every opponent play sequence.
// Transposition caching kicks in for strategies whose choices are pure
// functions of the visible state.
VerifyResult verify_strategy(const Strategy& prototype, const BiasedGame& game, Player side,
                             const SolverLimits& limits = {});

// Exhaustive adversary for the disjoint-box filler on the quotient space of
// interchangeable boxes: true iff greedy smallest-box filling wins every
// opponent line. Filler claims maker_bias per turn, opponent breaker_bias.
bool verify_box_filler(const std::vector<int>& box_sizes, int maker_bias, int breaker_bias,
                       Player first);

// All perfect matchings / Hamiltonian cycles of a small graph as edge-index
// sets (solver materialization helpers, exposed for tests).
std::vector<Bits> all_perfect_matchings(const Graph& g);
std::vector<Bits> all_hamiltonian_cycles(const Graph& g);
std::vector<Bits> all_spanning_trees(const Graph& g);

} // namespace solver
} // namespace gamelab
