#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gamelab/game.hpp"
#include "gamelab/potential.hpp"

namespace gamelab {
namespace strategies {

// Uniform random free element.
std::unique_ptr<Strategy> make_random();
// Lowest-index free element (internal baseline and fallback filler).
std::unique_ptr<Strategy> make_first_free();

// Potential blocker: plays `me`, killing sets of `family` that the opponent
// is completing. claimer_bias is the opponent's claims per round of this
// fight, my_weight the blocker's own claims. Greedy per-element potential
// decrease, lowest index on ties.
class PotentialBlocker : public Strategy {
public:
    PotentialBlocker(std::shared_ptr<const WinningFamily> family, Player me, int claimer_bias,
                     int my_weight, std::string name);

    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return name_; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return true; }

    // False when some target set has no board element at all (the blocker
    // cannot hit it).
    bool winnable() const { return winnable_; }
    double phi() const { return engine_.phi(); }

private:
    std::shared_ptr<const WinningFamily> family_;
    Player me_;
    EsBlockerEngine engine_;
    std::string name_;
    bool winnable_ = true;
};

// Blocks the game's own explicit family (the realized blocking criterion);
// typically assigned to Breaker.
std::unique_ptr<Strategy> make_es_blocker(const BiasedGame& game, Player side);

// Maker of the connectivity game: blocks the bipartition cut family of the
// board graph. Full cut enumeration up to full_cut_n vertices; above that
// only cuts with a bounded smaller side are tracked.
std::unique_ptr<PotentialBlocker> make_connectivity_maker(const Graph& board, int breaker_bias,
                                                          int full_cut_n = 20,
                                                          long long side_cap_sets = 200000);

// Maker of the perfect matching game: blocks the Hall family of the given
// bipartition (default: lexicographic halves).
std::unique_ptr<PotentialBlocker> make_matching_maker(const Graph& board, int breaker_bias,
                                                      std::vector<int> part_a = {});

// Maker of the Hamiltonian cycle game: odd claims block cuts that survive
// deleting any k vertices, even claims block the small-clique family.
class HamiltonicityMaker : public Strategy {
public:
    HamiltonicityMaker(const Graph& board, int breaker_bias);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "ham_maker"; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return true; }

    int cut_removal_k() const { return k_; }
    int clique_size() const { return clique_size_; }

private:
    std::shared_ptr<const WinningFamily> cut_family_;
    std::shared_ptr<const WinningFamily> clique_family_;
    EsBlockerEngine cut_engine_;
    EsBlockerEngine clique_engine_;
    int k_ = 1;
    int clique_size_ = 2;
};

// Greedy filler for disjoint-box families: claims inside the surviving box
// with the fewest free elements. With opponent_split = true the filler runs
// two half-bias responders, each fed every other opponent claim (the
// opponent-claims-two reduction).
class BoxFiller : public Strategy {
public:
    BoxFiller(std::shared_ptr<const WinningFamily> boxes, Player me, int my_bias,
              bool opponent_split);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "box_maker"; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return !opponent_split_; }

private:
    int pick_from_view(const GameState& state, int view) const;

    std::shared_ptr<const WinningFamily> boxes_;
    Player me_;
    int my_bias_;
    bool opponent_split_;
    Bits seen_opponent_;
    long long opponent_claims_ = 0;
    std::vector<Bits> view_dead_; // per responder view: boxes considered dead
};

// Breaker that claims every board edge at some vertex of a small
// low-degree vertex set, by playing box filler on ordered pairs.
class IsolationBreaker : public Strategy {
public:
    IsolationBreaker(const Graph& board, int breaker_bias);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "isolation"; }
    std::unique_ptr<Strategy> clone() const override;

    // The board graph was already disconnected; no moves needed.
    bool immediate_win() const { return immediate_win_; }
    const std::vector<int>& target_vertices() const { return targets_; }
    // Vertex isolated in the opponent's final graph, if the fill completed.
    std::optional<int> isolated_vertex(const Bits& breaker_edges) const;

private:
    struct Pair {
        int center;     // box owner (vertex whose star this is)
        int edge_index; // board element
    };

    void sync(const GameState& state);
    int translate(int pair_id, const GameState& state);

    const Graph* board_;
    int bias_;
    std::vector<int> targets_;
    std::vector<Pair> pairs_;                 // pair universe
    std::vector<std::vector<int>> box_pairs_; // per target: pair ids
    std::vector<int> pair_of_edge_fwd_, pair_of_edge_rev_;
    // pair states: 0 free, 1 mine (filler), 2 opponent's, 3 spent
    std::vector<char> pair_state_;
    std::vector<char> box_dead_view_[2];
    Bits seen_maker_, seen_breaker_;
    bool immediate_win_ = false;
};

// Maker that claims a uniformly random element it has not chosen before;
// elements found occupied are recorded as skips and substituted by the
// lowest free element.
class RandomMaker : public Strategy {
public:
    explicit RandomMaker(int board_size);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "random_maker"; }
    std::unique_ptr<Strategy> clone() const override;

    const std::vector<int>& stream() const { return stream_; }
    int skips() const { return skips_; }

private:
    Bits chosen_;
    std::vector<int> stream_;
    int skips_ = 0;
};

// Missing edge of a k-clique of the board in which the opponent owns all but
// one edge and that edge is free; lowest such edge, or none.
std::optional<int> threat_block_move(const GameState& state, const Graph& board, int k);

// Breaker for the clique game: half the budget answers immediate threats,
// the rest blocks unions of t cliques sharing three vertices. When the
// cluster family exceeds its cap the blocker falls back to threat answers
// plus lowest-free, with a warning flag.
class CliqueBreakerComposite : public Strategy {
public:
    CliqueBreakerComposite(const Graph& board, int k, int breaker_bias, int t = 2,
                           long long cluster_cap = 100000);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "clique_breaker"; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return true; }

    bool cluster_family_capped() const { return capped_; }
    const std::vector<int>& dangerous_fan_log() const { return fan_log_; }

private:
    const Graph* board_;
    int k_;
    int bias_;
    int t_;
    std::shared_ptr<const WinningFamily> clusters_;
    EsBlockerEngine engine_;
    bool capped_ = false;
    std::vector<int> fan_log_;
    std::vector<std::vector<int>> cliques_;            // k-cliques of the board
    std::vector<std::vector<int>> clique_edge_index_;  // their board elements
};

// Pairing Breaker on a low-back-degree vertex ordering: answers a claimed
// back edge of a vertex with another free back edge of the same vertex.
class DegeneracyPairingBreaker : public Strategy {
public:
    DegeneracyPairingBreaker(const Graph& board, int k);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "degeneracy_pairing"; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return true; }

    const std::vector<int>& ordering() const { return order_; }
    int fallback_moves() const { return fallbacks_; }

private:
    const Graph* board_;
    std::vector<int> position_; // vertex -> position in ordering
    std::vector<int> order_;
    int fallbacks_ = 0;
};

// Pairing Breaker on a wheel: spoke (hub, r_i) is paired with rim edge
// (r_i, r_{i+1}); every triangle of the wheel contains a full pair.
class WheelPairingBreaker : public Strategy {
public:
    explicit WheelPairingBreaker(const Graph& wheel);
    int choose(const GameState& state, Rng& rng) override;
    std::string_view name() const override { return "wheel_pairing"; }
    std::unique_ptr<Strategy> clone() const override;
    bool memoizable() const override { return true; }

    int hub() const { return hub_; }
    const std::vector<int>& rim() const { return rim_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

private:
    int hub_ = -1;
    std::vector<int> rim_;
    std::vector<std::pair<int, int>> pairs_; // (spoke element, rim element)
    std::vector<int> partner_;               // element -> element or -1
};

// Exact play through the solver; small boards only.
std::unique_ptr<Strategy> make_solver_optimal(const BiasedGame& game, const Graph* board_graph,
                                              int board_limit = 16);

// Wheel on 1 + rim_len vertices: vertex 0 is the hub.
Graph wheel_graph(int rim_len);

struct StrategyParams {
    int clique_k = 3;
    int cluster_t = 2;
    long long family_cap = kFamilyCap;
    int solver_board_limit = 16;
};

// Registry: es_blocker, box_maker, isolation, conn_maker, ham_maker,
// match_maker, random_maker, clique_breaker, degeneracy_pairing,
// wheel_pairing, random, first_free, solver_optimal.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const BiasedGame& game,
                                        const Graph* board_graph, Player side,
                                        const StrategyParams& params = {});
std::vector<std::string> strategy_names();

} // namespace strategies
} // namespace gamelab
