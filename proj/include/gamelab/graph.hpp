#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gamelab/rng.hpp"

namespace gamelab {

// Canonical undirected edge, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
    std::string str() const { return std::to_string(u) + "-" + std::to_string(v); }
};

// Simple undirected graph on labelled vertices 0..n-1. Immutable after
// construction; shared freely across workers.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Canonicalizes, sorts, rejects loops/duplicates/out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool has_edge(int u, int v) const;
    // Index into edges() or -1.
    int edge_index(int u, int v) const;

    std::vector<int> degrees() const;
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Row-per-vertex adjacency masks; requires n <= 64.
    std::vector<std::uint64_t> adjacency_bits() const;

    Graph with_extra_edges(const std::vector<Edge>& more) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_; // sorted, unique
    std::vector<std::vector<int>> adj_;
};

Graph complete_graph(int n);

// All C(n,2) edges of the complete graph, lexicographic.
std::vector<Edge> all_pairs(int n);

// Each edge kept independently with probability p.
Graph gnp(int n, double p, Seed seed);

// Exactly m edges, uniform; partial Fisher-Yates over the edge list of K_n.
Graph gnm(int n, long long m, Seed seed);

// Uniformly random ordering of all edges of K_n.
class GraphProcess {
public:
    GraphProcess(int n, Seed seed);
    int vertex_count() const { return n_; }
    int edge_total() const { return static_cast<int>(order_.size()); }
    const std::vector<Edge>& order() const { return order_; }
    Graph prefix(int i) const;

private:
    int n_ = 0;
    std::vector<Edge> order_;
};

GraphProcess graph_process(int n, Seed seed);

using GraphPredicate = std::function<bool(const Graph&)>;

// Smallest i with property(prefix(i)) true; property must be monotone
// increasing and hold on the full graph (else throws "never hit").
// Binary search; hitting_time_scan is the linear-reference version.
int hitting_time(const GraphProcess& process, const GraphPredicate& property);
int hitting_time_scan(const GraphProcess& process, const GraphPredicate& property);

// Edge-list text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g);

} // namespace gamelab
