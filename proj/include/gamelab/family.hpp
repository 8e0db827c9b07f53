#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gamelab/bitset.hpp"
#include "gamelab/graph.hpp"
#include "gamelab/oracles.hpp"

namespace gamelab {

// The element universe a game is played on; elements are 0..size-1.
struct Board {
    int size = 0;
    std::vector<std::string> labels; // empty => element indices printed

    std::string label(int e) const {
        return labels.empty() ? std::to_string(e) : labels[e];
    }
};

Board abstract_board(int size);
// Element i of the board is g.edge(i).
Board edge_board(const Graph& g);

inline constexpr long long kFamilyCap = 2'000'000;

// Either an explicit list of element sets, or a monotone predicate on
// Maker's final element set.
class WinningFamily {
public:
    enum class Kind { Explicit, Oracle };
    using OraclePredicate = std::function<bool(const Bits& maker_elements)>;

    static WinningFamily explicit_sets(int board_size, std::vector<Bits> sets,
                                       std::string name = "explicit");
    static WinningFamily oracle(int board_size, OraclePredicate pred, std::string name);

    Kind kind() const { return kind_; }
    bool is_explicit() const { return kind_ == Kind::Explicit; }
    int board_size() const { return board_size_; }
    const std::string& name() const { return name_; }

    const std::vector<Bits>& sets() const;
    bool contains_empty_set() const { return contains_empty_; }
    std::size_t set_count() const { return sets_.size(); }

    bool oracle_check(const Bits& maker) const;

    // True once Maker owns every element of some set (explicit only).
    std::optional<int> completed_set(const Bits& maker) const;

private:
    Kind kind_ = Kind::Explicit;
    int board_size_ = 0;
    std::string name_;
    std::vector<Bits> sets_;
    bool contains_empty_ = false;
    OraclePredicate pred_;
};

// Keeps only sets fully inside `surviving`; the game board becomes the
// surviving elements (masked at game construction).
WinningFamily thin_family(const WinningFamily& family, const Bits& surviving);

// Replaces each set A by A intersect surviving, deduplicated. An induced
// empty set is retained and flagged via contains_empty_set().
WinningFamily induce_family(const WinningFamily& family, const Bits& surviving);

// --- builders over a graph board (board element i = g.edge(i)) -------------

// All sets E(S, V\S) over bipartitions, intersected with E(G), deduplicated.
// side_cap < 0 enumerates every bipartition (requires n <= 20); otherwise
// only bipartitions whose smaller side has at most side_cap vertices.
WinningFamily cuts_family(const Graph& g, int side_cap = -1, long long cap = kFamilyCap);

// Cuts of G after deleting every k-subset of vertices.
WinningFamily removed_cuts_family(const Graph& g, int k, long long cap = kFamilyCap);

// Edge sets of the k-cliques present in G.
WinningFamily cliques_family(const Graph& g, int k, long long cap = kFamilyCap);

// Sets E(X,Y), X in A, Y in B nonempty, |X|+|Y| = n/2+1, intersected with
// E(G). Empty intersections are retained and flagged.
WinningFamily hall_family(const Graph& g, const std::vector<int>& a,
                          const std::vector<int>& b, long long cap = kFamilyCap);

// Disjoint boxes over an abstract board of sum(sizes) elements.
WinningFamily box_family(const std::vector<int>& sizes);

// Unions of t distinct k-cliques of G sharing at least 3 common vertices.
// Exceeding the cap throws (callers may fall back).
WinningFamily cluster_family(const Graph& g, int k, int t, long long cap = kFamilyCap);

// --- oracle-backed families -------------------------------------------------

WinningFamily connectivity_family(const Graph& g);
WinningFamily perfect_matching_family(const Graph& g);
WinningFamily hamiltonicity_family(const Graph& g, oracles::Limits limits = {});
WinningFamily k_clique_family(const Graph& g, int k);

// Maker's claimed edges as a subgraph of the board graph.
Graph maker_subgraph(const Graph& board, const Bits& maker);

} // namespace gamelab
