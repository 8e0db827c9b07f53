#include "gamelab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <queue>
#include <stdexcept>

#include "gamelab/bitset.hpp"

namespace gamelab {
namespace oracles {

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    auto d = g.degrees();
    return *std::min_element(d.begin(), d.end());
}

// ---------------------------------------------------------------------------
// General maximum matching, blossom contraction.

namespace {

class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : n_(g.vertex_count()), adj_(g.adjacency()), match_(n_, -1), parent_(n_, -1),
          base_(n_), used_(n_, 0), in_blossom_(n_, 0) {}

    std::vector<Edge> run() {
        // Greedy seed matching, then augment from each exposed vertex.
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int w : adj_[v])
                    if (match_[w] == -1) {
                        match_[v] = w;
                        match_[w] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int u = find_augmenting_path(v);
                if (u != -1) augment(u);
            }
        std::vector<Edge> result;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) result.emplace_back(v, match_[v]);
        return result;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<char> mark(n_, 0);
        for (;;) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

} // namespace

std::vector<Edge> maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }

std::optional<std::vector<Edge>> perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return std::nullopt;
    auto m = maximum_matching(g);
    if (static_cast<int>(m.size()) * 2 != n) return std::nullopt;
    return m;
}

bool has_perfect_matching(const Graph& g) { return perfect_matching(g).has_value(); }

// ---------------------------------------------------------------------------
// Bipartite matching and Hall violators.

namespace {

struct Kuhn {
    const std::vector<std::vector<int>>& adj; // indices into B
    std::vector<int>& match_b;                // B index -> A index
    std::vector<char> seen;

    bool try_augment(int a) {
        for (int b : adj[a]) {
            if (seen[b]) continue;
            seen[b] = 1;
            if (match_b[b] == -1 || try_augment(match_b[b])) {
                match_b[b] = a;
                return true;
            }
        }
        return false;
    }
};

} // namespace

std::optional<HallViolation> bipartite_hall_violation(const Graph& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b) {
    const int n = g.vertex_count();
    if (a.size() != b.size())
        throw std::invalid_argument("hall: sides must have equal size");
    std::vector<int> side(n, -1), pos(n, -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        side[a[i]] = 0;
        pos[a[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (side[b[i]] != -1) throw std::invalid_argument("hall: sides overlap");
        side[b[i]] = 1;
        pos[b[i]] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) throw std::invalid_argument("hall: sides must cover all vertices");

    const int half = static_cast<int>(a.size());
    std::vector<std::vector<int>> adj(half);
    for (const Edge& e : g.edges()) {
        if (side[e.u] == side[e.v]) continue; // only A-B edges matter
        int ai = side[e.u] == 0 ? pos[e.u] : pos[e.v];
        int bi = side[e.u] == 0 ? pos[e.v] : pos[e.u];
        adj[ai].push_back(bi);
    }

    std::vector<int> match_b(half, -1);
    Kuhn kuhn{adj, match_b, {}};
    int matched = 0;
    for (int i = 0; i < half; ++i) {
        kuhn.seen.assign(half, 0);
        if (kuhn.try_augment(i)) ++matched;
    }
    if (matched == half) return std::nullopt;

    // Alternating reachability from the exposed A-vertices gives a violating
    // pair: X the reachable A side, Y the reachable B side, |X| = |Y| + k.
    std::vector<int> match_a(half, -1);
    for (int bi = 0; bi < half; ++bi)
        if (match_b[bi] != -1) match_a[match_b[bi]] = bi;
    std::vector<char> in_x(half, 0), in_y(half, 0);
    std::vector<int> stack;
    for (int i = 0; i < half; ++i)
        if (match_a[i] == -1) {
            in_x[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int ai = stack.back();
        stack.pop_back();
        for (int bi : adj[ai]) {
            if (in_y[bi]) continue;
            in_y[bi] = 1;
            int back = match_b[bi];
            if (back != -1 && !in_x[back]) {
                in_x[back] = 1;
                stack.push_back(back);
            }
        }
    }
    HallViolation v;
    for (int i = 0; i < half; ++i) {
        if (in_x[i]) v.x.push_back(a[i]);
        if (in_y[i]) v.y.push_back(b[i]);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle, subset DP.

bool has_hamiltonian_cycle(const Graph& g, const Limits& limits) {
    const int n = g.vertex_count();
    if (n > limits.hamilton_max_n)
        throw std::runtime_error("hamiltonian_cycle: exact oracle limit exceeded (n > " +
                                 std::to_string(limits.hamilton_max_n) + ")");
    if (n < 3) return false;
    if (min_degree(g) < 2 || !is_connected(g)) return false;

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    // ends[mask] = vertices reachable as the end of a path from 0 over mask.
    std::vector<std::uint32_t> ends(std::size_t(1) << n, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t nxt = adj[v] & ~mask;
            while (nxt) {
                int w = std::countr_zero(nxt);
                nxt &= nxt - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return (ends[full] & adj[0] & ~1u) != 0;
}

// ---------------------------------------------------------------------------
// Vertex connectivity via unit-capacity max-flow on the split network.

namespace {

class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int from, int to, int cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    int max_flow(int s, int t, int cutoff) {
        int flow = 0;
        while (flow < cutoff && bfs(s, t)) {
            it_ = head_;
            while (flow < cutoff) {
                int pushed = dfs(s, t, cutoff - flow);
                if (!pushed) break;
                flow += pushed;
            }
        }
        return flow;
    }

private:
    struct E {
        int to, next, cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int i = head_[v]; i != -1; i = edges_[i].next)
                if (edges_[i].cap > 0 && level_[edges_[i].to] == -1) {
                    level_[edges_[i].to] = level_[v] + 1;
                    q.push(edges_[i].to);
                }
        }
        return level_[t] != -1;
    }

    int dfs(int v, int t, int limit) {
        if (v == t || limit == 0) return limit;
        for (int& i = it_[v]; i != -1; i = edges_[i].next) {
            E& e = edges_[i];
            if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
                int pushed = dfs(e.to, t, std::min(limit, e.cap));
                if (pushed) {
                    e.cap -= pushed;
                    edges_[i ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<E> edges_;
    std::vector<int> head_, level_, it_;
};

int st_vertex_connectivity(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    const int inf = std::numeric_limits<int>::max() / 4;
    Dinic dinic(2 * n);
    for (int v = 0; v < n; ++v) dinic.add_edge(2 * v, 2 * v + 1, v == s || v == t ? inf : 1);
    for (const Edge& e : g.edges()) {
        dinic.add_edge(2 * e.u + 1, 2 * e.v, inf);
        dinic.add_edge(2 * e.v + 1, 2 * e.u, inf);
    }
    return dinic.max_flow(2 * s + 1, 2 * t, n);
}

} // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    int best = n - 1; // complete-graph convention
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, st_vertex_connectivity(g, s, t));
    return best;
}

// ---------------------------------------------------------------------------
// Independence number, branch and bound on <= 64 vertices.

namespace {

struct AlphaSearch {
    const std::vector<std::uint64_t>& nbr;
    int best = 0;

    void go(std::uint64_t cand, int cur) {
        while (cand) {
            if (cur + std::popcount(cand) <= best) return;
            // Take the candidate of highest remaining degree first; removing
            // its closed neighborhood shrinks the residual fastest.
            std::uint64_t scan = cand;
            int pick = -1, pick_deg = -1;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                int d = std::popcount(nbr[v] & cand);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            go(cand & ~nbr[pick] & ~(1ull << pick), cur + 1);
            cand &= ~(1ull << pick);
        }
        best = std::max(best, cur);
    }
};

} // namespace

int independence_number(const Graph& g, const Limits& limits) {
    const int n = g.vertex_count();
    if (n > limits.independence_max_n || n > 64)
        throw std::runtime_error("independence_number: exact oracle limit exceeded (n > " +
                                 std::to_string(std::min(limits.independence_max_n, 64)) + ")");
    if (n == 0) return 0;
    auto rows = g.adjacency_bits();
    AlphaSearch search{rows};
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    search.go(all, 0);
    return search.best;
}

bool chvatal_erdos_sufficient(const Graph& g, const Limits& limits) {
    return vertex_connectivity(g) >= independence_number(g, limits);
}

// ---------------------------------------------------------------------------
// Union of two edge-disjoint forests (matroid-union augmentation).

namespace {

class TwoForests {
public:
    explicit TwoForests(const Graph& g) : g_(g), n_(g.vertex_count()), owner_(g.edge_count(), -1) {
        adj_[0].assign(n_, {});
        adj_[1].assign(n_, {});
    }

    void build() {
        for (int e = 0; e < g_.edge_count(); ++e) try_add(e);
    }

    std::vector<Edge> forest(int f) const {
        std::vector<Edge> out;
        for (int e = 0; e < g_.edge_count(); ++e)
            if (owner_[e] == f) out.push_back(g_.edge(e));
        return out;
    }

private:
    // Path of forest edges between u and v inside forest f, empty if
    // disconnected there.
    std::vector<int> forest_path(int f, int u, int v) const {
        std::vector<int> prev_edge(n_, -1), prev_vtx(n_, -1);
        std::vector<char> seen(n_, 0);
        std::vector<int> queue{u};
        seen[u] = 1;
        for (std::size_t qi = 0; qi < queue.size() && !seen[v]; ++qi) {
            int x = queue[qi];
            for (auto [y, e] : adj_[f][x])
                if (!seen[y]) {
                    seen[y] = 1;
                    prev_edge[y] = e;
                    prev_vtx[y] = x;
                    queue.push_back(y);
                }
        }
        std::vector<int> path;
        if (!seen[v]) return path;
        for (int x = v; x != u; x = prev_vtx[x]) path.push_back(prev_edge[x]);
        return path;
    }

    bool connected_in(int f, int u, int v) const {
        if (u == v) return true;
        return !forest_path(f, u, v).empty();
    }

    void insert(int f, int e) {
        owner_[e] = f;
        const Edge& ed = g_.edge(e);
        adj_[f][ed.u].push_back({ed.v, e});
        adj_[f][ed.v].push_back({ed.u, e});
    }

    void remove(int f, int e) {
        owner_[e] = -1;
        const Edge& ed = g_.edge(e);
        auto drop = [&](std::vector<std::pair<int, int>>& lst) {
            for (std::size_t i = 0; i < lst.size(); ++i)
                if (lst[i].second == e) {
                    lst[i] = lst.back();
                    lst.pop_back();
                    return;
                }
        };
        drop(adj_[f][ed.u]);
        drop(adj_[f][ed.v]);
    }

    // Exchange-graph BFS: when an edge cannot go directly into a forest, the
    // edges on its fundamental path there may be evicted instead. Shortest
    // augmenting sequences executed back-to-front keep both sides forests.
    bool try_add(int e0) {
        std::vector<int> label(g_.edge_count(), -2); // -2 unseen, -1 root
        label[e0] = -1;
        std::vector<int> queue{e0};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            const Edge& ed = g_.edge(x);
            for (int f = 0; f < 2; ++f) {
                if (owner_[x] == f) continue;
                if (!connected_in(f, ed.u, ed.v)) {
                    apply_chain(x, f, label);
                    return true;
                }
                for (int y : forest_path(f, ed.u, ed.v))
                    if (label[y] == -2) {
                        label[y] = x;
                        queue.push_back(y);
                    }
            }
        }
        return false;
    }

    void apply_chain(int x, int target, const std::vector<int>& label) {
        while (x != -1) {
            int old = owner_[x];
            if (old >= 0) remove(old, x);
            insert(target, x);
            target = old;
            x = label[x];
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> owner_;
    std::vector<std::vector<std::pair<int, int>>> adj_[2];
};

} // namespace

ForestPair max_two_forest_union(const Graph& g) {
    TwoForests tf(g);
    tf.build();
    return ForestPair{tf.forest(0), tf.forest(1)};
}

std::optional<std::pair<std::vector<Edge>, std::vector<Edge>>>
two_edge_disjoint_spanning_trees(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return std::make_pair(std::vector<Edge>{}, std::vector<Edge>{});
    auto fp = max_two_forest_union(g);
    if (static_cast<int>(fp.first.size()) == n - 1 &&
        static_cast<int>(fp.second.size()) == n - 1)
        return std::make_pair(std::move(fp.first), std::move(fp.second));
    return std::nullopt;
}

bool spanning_tree_and_two_forest(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("spanning_tree_and_two_forest: need n >= 2");
    auto fp = max_two_forest_union(g);
    return static_cast<int>(fp.first.size() + fp.second.size()) >= 2 * n - 3;
}

// ---------------------------------------------------------------------------
// Clique search.

namespace {

struct CliqueScan {
    const std::vector<Bits>& rows;
    int k;
    long long cap;
    std::vector<std::vector<int>>* sink = nullptr; // null => existence only
    std::vector<int> current;
    std::vector<int>* witness = nullptr;
    bool done = false;

    bool rec(const Bits& cand) {
        if (static_cast<int>(current.size()) == k) {
            if (witness) *witness = current;
            if (sink) {
                sink->push_back(current);
                if (cap >= 0 && static_cast<long long>(sink->size()) > cap)
                    throw std::runtime_error("clique enumeration: cap exceeded");
                return false; // keep enumerating
            }
            return true;
        }
        if (static_cast<int>(current.size()) + cand.count() < k) return false;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            current.push_back(v);
            Bits next = cand;
            next &= rows[v];
            // only higher-indexed candidates, each clique listed once
            for (int w = next.next(0); w >= 0 && w <= v; w = next.next(w + 1)) next.reset(w);
            if (rec(next)) return true;
            current.pop_back();
        }
        return false;
    }
};

std::vector<Bits> bit_rows(const Graph& g) {
    std::vector<Bits> rows(g.vertex_count(), Bits(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        rows[e.u].set(e.v);
        rows[e.v].set(e.u);
    }
    return rows;
}

} // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("find_clique: k must be at least 2");
    if (k > g.vertex_count()) return std::nullopt;
    auto rows = bit_rows(g);
    std::vector<int> witness;
    CliqueScan scan{rows, k, -1, nullptr, {}, &witness};
    Bits all(g.vertex_count());
    all.set_all();
    if (scan.rec(all)) return witness;
    return std::nullopt;
}

bool contains_clique(const Graph& g, int k) { return find_clique(g, k).has_value(); }

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k, long long cap) {
    if (k < 1) throw std::invalid_argument("enumerate_cliques: k must be positive");
    std::vector<std::vector<int>> out;
    if (k > g.vertex_count()) return out;
    if (k == 1) {
        for (int v = 0; v < g.vertex_count(); ++v) out.push_back({v});
        return out;
    }
    auto rows = bit_rows(g);
    CliqueScan scan{rows, k, cap, &out};
    Bits all(g.vertex_count());
    all.set_all();
    scan.rec(all);
    return out;
}

} // namespace oracles
} // namespace gamelab
