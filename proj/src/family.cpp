#include "gamelab/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gamelab {

Board abstract_board(int size) {
    if (size < 0) throw std::invalid_argument("board: negative size");
    return Board{size, {}};
}

Board edge_board(const Graph& g) {
    Board b;
    b.size = g.edge_count();
    b.labels.reserve(b.size);
    for (const Edge& e : g.edges()) b.labels.push_back(e.str());
    return b;
}

WinningFamily WinningFamily::explicit_sets(int board_size, std::vector<Bits> sets,
                                           std::string name) {
    WinningFamily f;
    f.kind_ = Kind::Explicit;
    f.board_size_ = board_size;
    f.name_ = std::move(name);
    std::unordered_set<Bits, BitsHash> seen;
    for (Bits& s : sets) {
        if (s.size() != board_size)
            throw std::invalid_argument("family: set over wrong board size");
        if (seen.insert(s).second) {
            if (s.none()) f.contains_empty_ = true;
            f.sets_.push_back(std::move(s));
        }
    }
    if (static_cast<long long>(f.sets_.size()) > kFamilyCap)
        throw std::runtime_error("family: explicit family exceeds cap, use a smaller board");
    return f;
}

WinningFamily WinningFamily::oracle(int board_size, OraclePredicate pred, std::string name) {
    WinningFamily f;
    f.kind_ = Kind::Oracle;
    f.board_size_ = board_size;
    f.name_ = std::move(name);
    f.pred_ = std::move(pred);
    return f;
}

const std::vector<Bits>& WinningFamily::sets() const {
    if (!is_explicit()) throw std::logic_error("family: oracle family has no explicit sets");
    return sets_;
}

bool WinningFamily::oracle_check(const Bits& maker) const {
    if (is_explicit()) throw std::logic_error("family: explicit family has no oracle");
    return pred_(maker);
}

std::optional<int> WinningFamily::completed_set(const Bits& maker) const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].is_subset_of(maker)) return static_cast<int>(i);
    return std::nullopt;
}

WinningFamily thin_family(const WinningFamily& family, const Bits& surviving) {
    if (!family.is_explicit())
        throw std::invalid_argument("thin_family: oracle families thin via the board graph");
    std::vector<Bits> kept;
    for (const Bits& s : family.sets())
        if (s.is_subset_of(surviving)) kept.push_back(s);
    return WinningFamily::explicit_sets(family.board_size(), std::move(kept),
                                        family.name() + "|thinned");
}

WinningFamily induce_family(const WinningFamily& family, const Bits& surviving) {
    if (!family.is_explicit())
        throw std::invalid_argument("induce_family: oracle families thin via the board graph");
    std::vector<Bits> induced;
    induced.reserve(family.set_count());
    for (const Bits& s : family.sets()) induced.push_back(s & surviving);
    return WinningFamily::explicit_sets(family.board_size(), std::move(induced),
                                        family.name() + "|induced");
}

namespace {

void check_cap(std::size_t count, long long cap, const char* what) {
    if (static_cast<long long>(count) > cap)
        throw std::runtime_error(std::string(what) +
                                 ": family exceeds cap, use a smaller board");
}

// Crossing edges of the vertex bipartition (S, V\S), as board elements.
Bits crossing_edges(const Graph& g, const std::vector<char>& in_s) {
    Bits cut(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (in_s[e.u] != in_s[e.v]) cut.set(i);
    }
    return cut;
}

} // namespace

WinningFamily cuts_family(const Graph& g, int side_cap, long long cap) {
    const int n = g.vertex_count();
    std::unordered_set<Bits, BitsHash> dedup;
    std::vector<Bits> sets;
    auto emit = [&](const std::vector<char>& in_s) {
        Bits cut = crossing_edges(g, in_s);
        if (dedup.insert(cut).second) {
            sets.push_back(std::move(cut));
            check_cap(sets.size(), cap, "cuts_family");
        }
    };
    if (side_cap < 0) {
        if (n > 20) throw std::runtime_error("cuts_family: full enumeration needs n <= 20");
        // Vertex 0 pinned to one side; each bipartition visited once.
        std::vector<char> in_s(n, 0);
        const std::uint64_t subsets = 1ull << (n - 1);
        for (std::uint64_t m = 1; m + 1 <= subsets; ++m) {
            for (int v = 1; v < n; ++v) in_s[v] = (m >> (v - 1)) & 1;
            in_s[0] = 0;
            emit(in_s);
        }
    } else {
        // Bounded smaller side; duplicates collapse in the dedup set.
        std::vector<int> pick;
        std::vector<char> in_s(n, 0);
        auto rec = [&](auto&& self, int start, int remaining) -> void {
            if (static_cast<int>(pick.size()) >= 1 && static_cast<int>(pick.size()) < n)
                emit(in_s);
            if (remaining == 0) return;
            for (int v = start; v < n; ++v) {
                pick.push_back(v);
                in_s[v] = 1;
                self(self, v + 1, remaining - 1);
                in_s[v] = 0;
                pick.pop_back();
            }
        };
        rec(rec, 0, std::min(side_cap, n - 1));
    }
    return WinningFamily::explicit_sets(g.edge_count(), std::move(sets), "cuts");
}

WinningFamily removed_cuts_family(const Graph& g, int k, long long cap) {
    const int n = g.vertex_count();
    if (k < 0 || k >= n - 1)
        throw std::invalid_argument("removed_cuts_family: need 0 <= k <= n-2");
    std::unordered_set<Bits, BitsHash> dedup;
    std::vector<Bits> sets;

    std::vector<int> removed;
    auto bipartitions = [&](const std::vector<int>& rest) {
        const int r = static_cast<int>(rest.size());
        std::vector<char> in_s(n, 0);
        std::vector<char> gone(n, 0);
        for (int v : removed) gone[v] = 1;
        const std::uint64_t subsets = 1ull << (r - 1);
        for (std::uint64_t m = 1; m + 1 <= subsets; ++m) {
            for (int i = 1; i < r; ++i) in_s[rest[i]] = (m >> (i - 1)) & 1;
            in_s[rest[0]] = 0;
            Bits cut(g.edge_count());
            for (int i = 0; i < g.edge_count(); ++i) {
                const Edge& e = g.edge(i);
                if (gone[e.u] || gone[e.v]) continue;
                if (in_s[e.u] != in_s[e.v]) cut.set(i);
            }
            if (dedup.insert(cut).second) {
                sets.push_back(std::move(cut));
                check_cap(sets.size(), cap, "removed_cuts_family");
            }
        }
    };

    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            std::vector<int> rest;
            std::vector<char> gone(n, 0);
            for (int v : removed) gone[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!gone[v]) rest.push_back(v);
            bipartitions(rest);
            return;
        }
        for (int v = start; v < n; ++v) {
            removed.push_back(v);
            self(self, v + 1, left - 1);
            removed.pop_back();
        }
    };
    rec(rec, 0, k);
    return WinningFamily::explicit_sets(g.edge_count(), std::move(sets), "removed_cuts");
}

WinningFamily cliques_family(const Graph& g, int k, long long cap) {
    auto cliques = oracles::enumerate_cliques(g, k, cap);
    std::vector<Bits> sets;
    sets.reserve(cliques.size());
    for (const auto& c : cliques) {
        Bits s(g.edge_count());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                s.set(g.edge_index(c[i], c[j]));
        sets.push_back(std::move(s));
    }
    return WinningFamily::explicit_sets(g.edge_count(), std::move(sets), "cliques");
}

WinningFamily hall_family(const Graph& g, const std::vector<int>& a,
                          const std::vector<int>& b, long long cap) {
    const int n = g.vertex_count();
    if (n % 2 != 0) throw std::invalid_argument("hall_family: n must be even");
    if (a.size() != b.size() || static_cast<int>(a.size() + b.size()) != n)
        throw std::invalid_argument("hall_family: sides must halve the vertex set");

    const int half = n / 2;
    const int want = half + 1;
    std::vector<Bits> sets;
    std::unordered_set<Bits, BitsHash> dedup;

    // Element lookup per (a-index, b-index) pair; -1 when the edge is absent.
    std::vector<std::vector<int>> elem(half, std::vector<int>(half, -1));
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) elem[i][j] = g.edge_index(a[i], b[j]);

    std::vector<int> xs;
    std::vector<int> ys;
    auto emit = [&] {
        Bits s(g.edge_count());
        for (int i : xs)
            for (int j : ys)
                if (elem[i][j] >= 0) s.set(elem[i][j]);
        if (dedup.insert(s).second) {
            sets.push_back(std::move(s));
            check_cap(sets.size(), cap, "hall_family");
        }
    };
    auto rec_y = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            emit();
            return;
        }
        for (int j = start; j + left <= half; ++j) {
            ys.push_back(j);
            self(self, j + 1, left - 1);
            ys.pop_back();
        }
    };
    auto rec_x = [&](auto&& self, int start, int left, int ysize) -> void {
        if (left == 0) {
            rec_y(rec_y, 0, ysize);
            return;
        }
        for (int i = start; i + left <= half; ++i) {
            xs.push_back(i);
            self(self, i + 1, left - 1, ysize);
            xs.pop_back();
        }
    };
    for (int xsize = 1; xsize <= half; ++xsize) {
        int ysize = want - xsize;
        if (ysize >= 1 && ysize <= half) rec_x(rec_x, 0, xsize, ysize);
    }
    return WinningFamily::explicit_sets(g.edge_count(), std::move(sets), "hall");
}

WinningFamily box_family(const std::vector<int>& sizes) {
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("box_family: box sizes must be positive");
        total += s;
    }
    std::vector<Bits> sets;
    int at = 0;
    for (int s : sizes) {
        Bits box(total);
        for (int i = 0; i < s; ++i) box.set(at + i);
        at += s;
        sets.push_back(std::move(box));
    }
    return WinningFamily::explicit_sets(total, std::move(sets), "boxes");
}

WinningFamily cluster_family(const Graph& g, int k, int t, long long cap) {
    if (k < 3 || t < 1) throw std::invalid_argument("cluster_family: need k >= 3, t >= 1");
    auto cliques = oracles::enumerate_cliques(g, k, cap);
    std::vector<Bits> vbits;
    vbits.reserve(cliques.size());
    for (const auto& c : cliques) {
        Bits b(g.vertex_count());
        for (int v : c) b.set(v);
        vbits.push_back(std::move(b));
    }
    std::vector<Bits> sets;
    std::unordered_set<Bits, BitsHash> dedup;
    auto edges_of = [&](const std::vector<int>& picked) {
        Bits s(g.edge_count());
        for (int ci : picked) {
            const auto& c = cliques[ci];
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    s.set(g.edge_index(c[i], c[j]));
        }
        return s;
    };
    std::vector<int> picked;
    // All t-subsets of cliques pairwise sharing >= 3 vertices.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(picked.size()) == t) {
            Bits s = edges_of(picked);
            if (dedup.insert(s).second) {
                sets.push_back(std::move(s));
                check_cap(sets.size(), cap, "cluster_family");
            }
            return;
        }
        for (int ci = start; ci < static_cast<int>(cliques.size()); ++ci) {
            bool ok = true;
            for (int pj : picked)
                if (vbits[pj].count_and(vbits[ci]) < 3) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(ci);
            self(self, ci + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
    return WinningFamily::explicit_sets(g.edge_count(), std::move(sets), "clusters");
}

Graph maker_subgraph(const Graph& board, const Bits& maker) {
    std::vector<Edge> es;
    maker.for_each([&](int i) { es.push_back(board.edge(i)); });
    return Graph(board.vertex_count(), std::move(es));
}

WinningFamily connectivity_family(const Graph& g) {
    Graph board = g;
    return WinningFamily::oracle(
        g.edge_count(),
        [board](const Bits& maker) {
            return oracles::is_connected(maker_subgraph(board, maker));
        },
        "connectivity");
}

WinningFamily perfect_matching_family(const Graph& g) {
    Graph board = g;
    return WinningFamily::oracle(
        g.edge_count(),
        [board](const Bits& maker) {
            return oracles::has_perfect_matching(maker_subgraph(board, maker));
        },
        "perfect_matching");
}

WinningFamily hamiltonicity_family(const Graph& g, oracles::Limits limits) {
    Graph board = g;
    return WinningFamily::oracle(
        g.edge_count(),
        [board, limits](const Bits& maker) {
            return oracles::has_hamiltonian_cycle(maker_subgraph(board, maker), limits);
        },
        "hamiltonicity");
}

WinningFamily k_clique_family(const Graph& g, int k) {
    Graph board = g;
    return WinningFamily::oracle(
        g.edge_count(),
        [board, k](const Bits& maker) {
            return oracles::contains_clique(maker_subgraph(board, maker), k);
        },
        "clique" + std::to_string(k));
}

} // namespace gamelab
