#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/family.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

enum class Player { Maker, Breaker };

inline Player other(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }
inline const char* player_name(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

struct Move {
    Player player;
    int element;
};

struct GameState {
    Bits maker;
    Bits breaker;
    Bits free;
    Player to_move = Player::Maker;
    int taken_this_turn = 0;
    std::optional<Move> last_move;

    int board_size() const { return free.size(); }
};

struct BiasedGame {
    Board board;
    WinningFamily family;
    int maker_bias = 1;
    int breaker_bias = 1;
    Player first = Player::Maker;
    // Elements outside the mask are not part of the game (random thinning).
    std::optional<Bits> playable;
    // Oracle families: test Maker's set after every Maker move instead of
    // only at the end. End evaluation is sound since Maker's set only grows.
    bool oracle_incremental = false;
};

BiasedGame new_game(Board board, WinningFamily family, int maker_bias, int breaker_bias,
                    Player first);

struct Outcome {
    Player winner = Player::Breaker;
    std::optional<Bits> witness; // winning set achieved, explicit families
    std::vector<Move> transcript;
    bool vacuous_win = false; // empty set was in the family
    std::string maker_name;
    std::string breaker_name;
    Seed seed;
};

class Strategy {
public:
    virtual ~Strategy() = default;
    // Must return a free element of the current state.
    virtual int choose(const GameState& state, Rng& rng) = 0;
    virtual std::string_view name() const = 0;
    virtual std::unique_ptr<Strategy> clone() const = 0;
    // True when future choices depend only on the visible state (no hidden
    // history); enables transposition caching in strategy verification.
    virtual bool memoizable() const { return false; }
};

// Runs until Maker completes a winning set or the board is exhausted. A
// mover facing fewer free elements than its bias claims all remaining.
Outcome play(const BiasedGame& game, Strategy& maker, Strategy& breaker, Seed seed);

// "move_index player element" per line.
std::string transcript_text(const Outcome& o, const Board& board);
std::string outcome_json(const Outcome& o, const Board& board);

} // namespace gamelab
