#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gamelab/graph.hpp"

namespace gamelab {
namespace oracles {

// Size caps for the exact oracles. They fail loudly instead of
// approximating; override per call (CLI wires GAMES_LAB_LIMITS in here).
struct Limits {
    int hamilton_max_n = 22;
    int independence_max_n = 40;
};

bool is_connected(const Graph& g);
int min_degree(const Graph& g);

// Maximum matching on a general graph (blossom contraction), returned as a
// list of disjoint edges.
std::vector<Edge> maximum_matching(const Graph& g);
std::optional<std::vector<Edge>> perfect_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

struct HallViolation {
    std::vector<int> x; // subset of A
    std::vector<int> y; // subset of B, |x| > |y|, no edge from x to B \ y
};
// none iff a perfect matching on A-B edges exists. A, B must partition the
// vertex set into equal halves.
std::optional<HallViolation> bipartite_hall_violation(const Graph& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b);

// Exact via subset DP over (visited set, last vertex).
bool has_hamiltonian_cycle(const Graph& g, const Limits& limits = {});

// kappa(G); n-1 for the complete graph by convention, 0 when disconnected.
int vertex_connectivity(const Graph& g);

// Exact alpha(G) via branch and bound; n capped.
int independence_number(const Graph& g, const Limits& limits = {});

// kappa(G) >= alpha(G); implies Hamiltonicity for n >= 3.
bool chvatal_erdos_sufficient(const Graph& g, const Limits& limits = {});

// Largest union of two edge-disjoint forests (matroid-union augmentation).
// first/second are forests; |first| + |second| is maximum.
struct ForestPair {
    std::vector<Edge> first;
    std::vector<Edge> second;
};
ForestPair max_two_forest_union(const Graph& g);

std::optional<std::pair<std::vector<Edge>, std::vector<Edge>>>
two_edge_disjoint_spanning_trees(const Graph& g);

// Spanning tree plus an edge-disjoint spanning forest of exactly two
// components; equivalent to two-forest union rank >= 2n-3.
bool spanning_tree_and_two_forest(const Graph& g);

std::optional<std::vector<int>> find_clique(const Graph& g, int k);
bool contains_clique(const Graph& g, int k);

// All k-cliques as sorted vertex lists (used by family builders and the
// structural detectors).
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k,
                                                long long cap = -1);

} // namespace oracles
} // namespace gamelab
