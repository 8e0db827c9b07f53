#include "gamelab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gamelab {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop " + e.str());
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("graph: endpoint out of range " + e.str());
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::vector<std::uint64_t> Graph::adjacency_bits() const {
    if (n_ > 64) throw std::invalid_argument("adjacency_bits: more than 64 vertices");
    std::vector<std::uint64_t> rows(n_, 0);
    for (const Edge& e : edges_) {
        rows[e.u] |= 1ull << e.v;
        rows[e.v] |= 1ull << e.u;
    }
    return rows;
}

Graph Graph::with_extra_edges(const std::vector<Edge>& more) const {
    std::vector<Edge> all = edges_;
    for (const Edge& e : more)
        if (!has_edge(e.u, e.v)) all.push_back(e);
    return Graph(n_, std::move(all));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    return Graph(n, all_pairs(n));
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return es;
}

Graph gnp(int n, double p, Seed seed) {
    if (n < 1) throw std::invalid_argument("gnp: n must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0,1]");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph gnm(int n, long long m, Seed seed) {
    if (n < 1) throw std::invalid_argument("gnm: n must be positive");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total) throw std::invalid_argument("gnm: M outside [0, C(n,2)]");
    Rng rng(seed);
    std::vector<Edge> pool = all_pairs(n);
    // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(total - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return Graph(n, std::move(pool));
}

GraphProcess::GraphProcess(int n, Seed seed) : n_(n), order_(all_pairs(n)) {
    if (n < 2) throw std::invalid_argument("graph_process: n must be at least 2");
    Rng rng(seed);
    for (std::size_t i = order_.size(); i > 1; --i)
        std::swap(order_[i - 1], order_[rng.below(i)]);
}

Graph GraphProcess::prefix(int i) const {
    if (i < 0 || i > edge_total())
        throw std::invalid_argument("prefix: index outside [0, C(n,2)]");
    return Graph(n_, std::vector<Edge>(order_.begin(), order_.begin() + i));
}

GraphProcess graph_process(int n, Seed seed) { return GraphProcess(n, seed); }

int hitting_time(const GraphProcess& process, const GraphPredicate& property) {
    int lo = 0, hi = process.edge_total();
    if (!property(process.prefix(hi)))
        throw std::runtime_error("hitting_time: never hit (property false on complete graph)");
    if (property(process.prefix(0))) return 0;
    // Invariant: property false at lo, true at hi.
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (property(process.prefix(mid)) ? hi : lo) = mid;
    }
    return hi;
}

int hitting_time_scan(const GraphProcess& process, const GraphPredicate& property) {
    for (int i = 0; i <= process.edge_total(); ++i)
        if (property(process.prefix(i))) return i;
    throw std::runtime_error("hitting_time: never hit (property false on complete graph)");
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header \"n m\"");
    std::vector<Edge> es;
    es.reserve(m);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated edge lines");
        es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void save_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(out, g);
}

} // namespace gamelab
