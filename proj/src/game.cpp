#include "gamelab/game.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gamelab {

BiasedGame new_game(Board board, WinningFamily family, int maker_bias, int breaker_bias,
                    Player first) {
    if (family.board_size() != board.size)
        throw std::invalid_argument("new_game: family board does not match game board");
    if (maker_bias < 1 || breaker_bias < 1)
        throw std::invalid_argument("new_game: biases must be at least 1");
    BiasedGame g;
    g.board = std::move(board);
    g.family = std::move(family);
    g.maker_bias = maker_bias;
    g.breaker_bias = breaker_bias;
    g.first = first;
    return g;
}

Outcome play(const BiasedGame& game, Strategy& maker, Strategy& breaker, Seed seed) {
    Outcome out;
    out.maker_name = std::string(maker.name());
    out.breaker_name = std::string(breaker.name());
    out.seed = seed;

    GameState st;
    st.maker = Bits(game.board.size);
    st.breaker = Bits(game.board.size);
    if (game.playable) {
        st.free = *game.playable;
    } else {
        st.free = Bits(game.board.size);
        st.free.set_all();
    }
    st.to_move = game.first;
    st.taken_this_turn = 0;

    const bool explicit_family = game.family.is_explicit();

    // Trivial case: the empty set is a winning set.
    if (explicit_family && game.family.contains_empty_set()) {
        out.winner = Player::Maker;
        out.vacuous_win = true;
        out.witness = Bits(game.board.size);
        return out;
    }

    // Per-set progress for explicit families.
    std::vector<int> missing;
    std::vector<char> dead;
    std::vector<std::vector<int>> sets_of; // element -> set indices
    if (explicit_family) {
        const auto& sets = game.family.sets();
        missing.resize(sets.size());
        dead.assign(sets.size(), 0);
        sets_of.resize(game.board.size);
        for (std::size_t s = 0; s < sets.size(); ++s) {
            missing[s] = sets[s].count();
            sets[s].for_each([&](int e) { sets_of[e].push_back(static_cast<int>(s)); });
            // Sets reaching outside the playable mask can never be completed.
            if (game.playable && !sets[s].is_subset_of(*game.playable)) dead[s] = 1;
        }
    }

    Rng maker_rng(derive(seed, 1));
    Rng breaker_rng(derive(seed, 2));

    while (st.free.any()) {
        const bool maker_turn = st.to_move == Player::Maker;
        Strategy& mover = maker_turn ? maker : breaker;
        Rng& rng = maker_turn ? maker_rng : breaker_rng;
        const int bias = maker_turn ? game.maker_bias : game.breaker_bias;

        int e = mover.choose(st, rng);
        if (e < 0 || e >= game.board.size || !st.free.test(e))
            throw std::runtime_error("play: strategy \"" + std::string(mover.name()) +
                                     "\" returned a non-free element");

        st.free.reset(e);
        (maker_turn ? st.maker : st.breaker).set(e);
        out.transcript.push_back({st.to_move, e});
        st.last_move = Move{st.to_move, e};

        if (explicit_family) {
            for (int s : sets_of[e]) {
                if (maker_turn) {
                    if (--missing[s] == 0 && !dead[s]) {
                        out.winner = Player::Maker;
                        out.witness = game.family.sets()[s];
                        return out;
                    }
                } else {
                    dead[s] = 1;
                }
            }
        } else if (maker_turn && game.oracle_incremental) {
            if (game.family.oracle_check(st.maker)) {
                out.winner = Player::Maker;
                return out;
            }
        }

        if (++st.taken_this_turn >= bias) {
            st.to_move = other(st.to_move);
            st.taken_this_turn = 0;
        }
    }

    if (!explicit_family && game.family.oracle_check(st.maker)) {
        out.winner = Player::Maker;
        return out;
    }
    out.winner = Player::Breaker;
    return out;
}

std::string transcript_text(const Outcome& o, const Board& board) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < o.transcript.size(); ++i)
        ss << i << ' ' << player_name(o.transcript[i].player) << ' '
           << board.label(o.transcript[i].element) << '\n';
    return ss.str();
}

std::string outcome_json(const Outcome& o, const Board& board) {
    nlohmann::json j;
    j["winner"] = player_name(o.winner);
    j["seed"] = o.seed.master;
    j["maker"] = o.maker_name;
    j["breaker"] = o.breaker_name;
    j["vacuous_win"] = o.vacuous_win;
    if (o.witness) {
        std::vector<std::string> w;
        o.witness->for_each([&](int e) { w.push_back(board.label(e)); });
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : o.transcript)
        moves.push_back({{"player", player_name(m.player)}, {"element", board.label(m.element)}});
    j["transcript"] = moves;
    return j.dump(2);
}

} // namespace gamelab
