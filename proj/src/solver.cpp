#include "gamelab/solver.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "gamelab/oracles.hpp"

namespace gamelab {
namespace solver {

namespace {

class Search {
public:
    Search(const SolveInput& in, bool use_cache)
        : in_(in), use_cache_(use_cache), maker_(in.board_size), breaker_(in.board_size),
          free_(in.board_size) {
        if (in.playable)
            free_ = *in.playable;
        else
            free_.set_all();
        sizes_.reserve(in.sets.size());
        maker_count_.assign(in.sets.size(), 0);
        breaker_count_.assign(in.sets.size(), 0);
        sets_of_.resize(in.board_size);
        alive_ = 0;
        for (std::size_t s = 0; s < in.sets.size(); ++s) {
            sizes_.push_back(in.sets[s].count());
            in.sets[s].for_each([&](int e) { sets_of_[e].push_back(static_cast<int>(s)); });
            bool playable_set = !in.playable || in.sets[s].is_subset_of(*in.playable);
            viable_.push_back(playable_set);
            if (playable_set) ++alive_;
            if (playable_set && sizes_.back() == 0) completed_ = 1;
        }
    }

    SolveResult run() {
        SolveResult r;
        r.cached = use_cache_ && memo_.count(key(in_.first, 0)) > 0;
        r.winner = search(in_.first, 0);
        r.nodes = nodes_;
        if (free_.any()) r.principal_move = principal(in_.first, 0, r.winner);
        return r;
    }

    Player value_from(const Bits& maker, const Bits& breaker, Player to_move, int taken) {
        load(maker, breaker);
        return search(to_move, taken);
    }

    int best_from(const Bits& maker, const Bits& breaker, Player to_move, int taken) {
        load(maker, breaker);
        Player v = search(to_move, taken);
        return principal(to_move, taken, v);
    }

private:
    std::uint64_t key(Player to_move, int taken) const {
        std::uint64_t k = 0;
        for (int e = 0; e < in_.board_size; ++e) {
            if (maker_.test(e)) k |= 1ull << (2 * e);
            if (breaker_.test(e)) k |= 2ull << (2 * e);
        }
        k = k * 4 + (to_move == Player::Maker ? 0 : 1) * 2;
        return k * 32 + taken;
    }

    void load(const Bits& maker, const Bits& breaker) {
        // Reset and replay the given claims.
        maker_ = Bits(in_.board_size);
        breaker_ = Bits(in_.board_size);
        if (in_.playable)
            free_ = *in_.playable;
        else {
            free_ = Bits(in_.board_size);
            free_.set_all();
        }
        std::fill(maker_count_.begin(), maker_count_.end(), 0);
        std::fill(breaker_count_.begin(), breaker_count_.end(), 0);
        alive_ = 0;
        completed_ = 0;
        for (std::size_t s = 0; s < in_.sets.size(); ++s) {
            if (viable_[s]) ++alive_;
            if (viable_[s] && sizes_[s] == 0) completed_ = 1;
        }
        maker.for_each([&](int e) { apply(e, Player::Maker); });
        breaker.for_each([&](int e) { apply(e, Player::Breaker); });
    }

    void apply(int e, Player p) {
        free_.reset(e);
        (p == Player::Maker ? maker_ : breaker_).set(e);
        const bool completer = p == in_.completer;
        auto& own = p == Player::Maker ? maker_count_ : breaker_count_;
        auto& opp_of = p == Player::Maker ? breaker_count_ : maker_count_;
        (void)opp_of;
        for (int s : sets_of_[e]) {
            if (!viable_[s]) continue;
            ++own[s];
            if (completer) {
                if (other_count(s) == 0 && own[s] == sizes_[s]) ++completed_;
            } else {
                if (own[s] == 1) --alive_;
            }
        }
    }

    void undo(int e, Player p) {
        const bool completer = p == in_.completer;
        auto& own = p == Player::Maker ? maker_count_ : breaker_count_;
        for (int s : sets_of_[e]) {
            if (!viable_[s]) continue;
            if (completer) {
                if (other_count(s) == 0 && own[s] == sizes_[s]) --completed_;
            } else {
                if (own[s] == 1) ++alive_;
            }
            --own[s];
        }
        free_.set(e);
        (p == Player::Maker ? maker_ : breaker_).reset(e);
    }

    int other_count(int s) const {
        return in_.completer == Player::Maker ? breaker_count_[s] : maker_count_[s];
    }

    Player search(Player to_move, int taken) {
        ++nodes_;
        if (completed_ > 0) return in_.completer;
        if (alive_ == 0) return other(in_.completer);
        if (free_.none()) return other(in_.completer);

        const std::uint64_t k = key(to_move, taken);
        if (use_cache_) {
            auto it = memo_.find(k);
            if (it != memo_.end()) return it->second ? Player::Maker : Player::Breaker;
        }

        const int bias = to_move == Player::Maker ? in_.maker_bias : in_.breaker_bias;
        Player next_player = to_move;
        int next_taken = taken + 1;
        if (next_taken >= bias) {
            next_player = other(to_move);
            next_taken = 0;
        }

        Player result = other(to_move); // worst case for the mover
        for (int e = free_.next(0); e >= 0; e = free_.next(e + 1)) {
            apply(e, to_move);
            Player w = search(next_player, next_taken);
            undo(e, to_move);
            if (w == to_move) {
                result = to_move;
                break;
            }
        }
        if (use_cache_) memo_[k] = result == Player::Maker;
        return result;
    }

    int principal(Player to_move, int taken, Player value) {
        const int bias = to_move == Player::Maker ? in_.maker_bias : in_.breaker_bias;
        Player next_player = to_move;
        int next_taken = taken + 1;
        if (next_taken >= bias) {
            next_player = other(to_move);
            next_taken = 0;
        }
        for (int e = free_.next(0); e >= 0; e = free_.next(e + 1)) {
            apply(e, to_move);
            Player w = completed_ > 0 ? in_.completer
                       : alive_ == 0  ? other(in_.completer)
                       : free_.none() ? other(in_.completer)
                                      : search(next_player, next_taken);
            undo(e, to_move);
            if (w == value) return e;
        }
        return free_.next(0);
    }

    const SolveInput& in_;
    bool use_cache_;
    Bits maker_, breaker_, free_;
    std::vector<int> sizes_;
    std::vector<char> viable_;
    std::vector<int> maker_count_, breaker_count_;
    std::vector<std::vector<int>> sets_of_;
    int alive_ = 0;
    int completed_ = 0;
    long long nodes_ = 0;
    std::unordered_map<std::uint64_t, bool> memo_;
};

void check_limits(const SolveInput& in, const SolverLimits& limits) {
    if (in.board_size > limits.board_max)
        throw std::runtime_error("solver: board of " + std::to_string(in.board_size) +
                                 " elements exceeds the limit of " +
                                 std::to_string(limits.board_max));
    // 2 bits per element plus phase must pack into the 64-bit cache key
    if (in.board_size > 28)
        throw std::runtime_error("solver: boards above 28 elements are not supported");
    if (in.maker_bias < 1 || in.breaker_bias < 1)
        throw std::invalid_argument("solver: biases must be at least 1");
}

} // namespace

SolveResult solve(const SolveInput& input, const SolverLimits& limits, bool use_cache) {
    check_limits(input, limits);
    Search s(input, use_cache);
    return s.run();
}

int best_move(const SolveInput& input, const Bits& maker, const Bits& breaker, Player to_move,
              int taken_this_turn, const SolverLimits& limits) {
    check_limits(input, limits);
    Search s(input, true);
    return s.best_from(maker, breaker, to_move, taken_this_turn);
}

SolveInput make_solver_input(const BiasedGame& game, const Graph* board_graph) {
    SolveInput in;
    in.board_size = game.board.size;
    in.maker_bias = game.maker_bias;
    in.breaker_bias = game.breaker_bias;
    in.first = game.first;
    in.playable = game.playable;
    if (game.family.is_explicit()) {
        in.sets = game.family.sets();
        in.completer = Player::Maker;
        return in;
    }
    if (!board_graph)
        throw std::invalid_argument("solver: oracle family needs the board graph");
    const std::string& name = game.family.name();
    if (name == "connectivity") {
        in.sets = cuts_family(*board_graph).sets();
        in.completer = Player::Breaker;
    } else if (name == "perfect_matching") {
        in.sets = all_perfect_matchings(*board_graph);
        in.completer = Player::Maker;
    } else if (name == "hamiltonicity") {
        in.sets = all_hamiltonian_cycles(*board_graph);
        in.completer = Player::Maker;
    } else if (name.rfind("clique", 0) == 0) {
        int k = std::stoi(name.substr(6));
        in.sets = cliques_family(*board_graph, k).sets();
        in.completer = Player::Maker;
    } else {
        throw std::invalid_argument("solver: cannot materialize oracle family " + name);
    }
    return in;
}

// ---------------------------------------------------------------------------

namespace {

struct VerifyContext {
    const BiasedGame& game;
    Player side; // the verified strategy's side
    Strategy* strategy;
    Rng rng{Seed{0}};
    std::unordered_map<std::uint64_t, bool> memo;
    bool memo_ok = false;
    std::vector<Move> path;
    std::vector<Move> counterexample;

    // terminal evaluation for explicit families
    std::optional<Player> terminal(const GameState& st) const {
        if (game.family.is_explicit()) {
            if (game.family.completed_set(st.maker)) return Player::Maker;
            bool any_alive = false;
            for (const Bits& s : game.family.sets())
                if (!s.intersects(st.breaker) && (!game.playable || s.is_subset_of(*game.playable))) {
                    any_alive = true;
                    break;
                }
            if (!any_alive) return Player::Breaker;
            if (st.free.none()) return Player::Breaker;
            return std::nullopt;
        }
        if (st.free.none())
            return game.family.oracle_check(st.maker) ? Player::Maker : Player::Breaker;
        if (game.oracle_incremental && game.family.oracle_check(st.maker)) return Player::Maker;
        return std::nullopt;
    }

    std::uint64_t state_key(const GameState& st) const {
        std::uint64_t k = 0;
        for (int e = 0; e < st.board_size(); ++e) {
            if (st.maker.test(e)) k |= 1ull << (2 * e);
            if (st.breaker.test(e)) k |= 2ull << (2 * e);
        }
        return k;
    }
};

bool verify_walk(VerifyContext& ctx, GameState& st, Strategy* strat) {
    auto term = ctx.terminal(st);
    if (term) {
        bool ok = *term == ctx.side;
        if (!ok && ctx.counterexample.empty()) ctx.counterexample = ctx.path;
        return ok;
    }

    const bool strategist = st.to_move == ctx.side;
    const int bias = st.to_move == Player::Maker ? ctx.game.maker_bias : ctx.game.breaker_bias;

    auto advance = [&](int e) {
        st.free.reset(e);
        (st.to_move == Player::Maker ? st.maker : st.breaker).set(e);
        ctx.path.push_back({st.to_move, e});
    };
    auto retreat = [&](int e, Player was, int taken_was) {
        ctx.path.pop_back();
        (was == Player::Maker ? st.maker : st.breaker).reset(e);
        st.free.set(e);
        st.to_move = was;
        st.taken_this_turn = taken_was;
    };

    const Player was = st.to_move;
    const int taken_was = st.taken_this_turn;
    const auto last_was = st.last_move;

    if (strategist) {
        int e = strat->choose(st, ctx.rng);
        if (e < 0 || e >= st.board_size() || !st.free.test(e))
            throw std::runtime_error("verify: strategy returned a non-free element");
        advance(e);
        st.last_move = Move{was, e};
        if (++st.taken_this_turn >= bias) {
            st.to_move = other(was);
            st.taken_this_turn = 0;
        }
        bool ok = verify_walk(ctx, st, strat);
        retreat(e, was, taken_was);
        st.last_move = last_was;
        return ok;
    }

    // Adversary: all free elements. Cache only at turn starts of pure
    // strategies; (maker, breaker) determines everything downstream there.
    const bool cacheable = ctx.memo_ok && st.taken_this_turn == 0;
    std::uint64_t key = 0;
    if (cacheable) {
        key = ctx.state_key(st);
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end()) return it->second;
    }

    bool all_ok = true;
    for (int e = st.free.next(0); e >= 0 && all_ok; e = st.free.next(e + 1)) {
        std::unique_ptr<Strategy> branch_copy;
        Strategy* branch = strat;
        if (!strat->memoizable()) {
            branch_copy = strat->clone();
            branch = branch_copy.get();
        }
        advance(e);
        st.last_move = Move{was, e};
        if (++st.taken_this_turn >= bias) {
            st.to_move = other(was);
            st.taken_this_turn = 0;
        }
        bool ok = verify_walk(ctx, st, branch);
        retreat(e, was, taken_was);
        st.last_move = last_was;
        if (!ok) all_ok = false;
    }
    if (cacheable) ctx.memo[key] = all_ok;
    return all_ok;
}

} // namespace

VerifyResult verify_strategy(const Strategy& prototype, const BiasedGame& game, Player side,
                             const SolverLimits& limits) {
    if (game.board.size > limits.board_max)
        throw std::runtime_error("verify: board of " + std::to_string(game.board.size) +
                                 " elements exceeds the limit of " +
                                 std::to_string(limits.board_max));
    auto strat = prototype.clone();
    VerifyContext ctx{game, side, strat.get()};
    ctx.memo_ok = strat->memoizable() && game.board.size <= 28;

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

    VerifyResult r;
    if (game.family.is_explicit() && game.family.contains_empty_set()) {
        r.ok = side == Player::Maker;
        return r;
    }
    r.ok = verify_walk(ctx, st, strat.get());
    if (!r.ok) r.counterexample = ctx.counterexample;
    return r;
}

// ---------------------------------------------------------------------------
// Quotient-space exhaustive adversary for the box game.

namespace {

struct BoxKey {
    std::vector<int> alive; // sorted free counts
    int junk;
    int to_move; // 0 filler, 1 opponent
    int taken;

    bool operator<(const BoxKey& o) const {
        if (alive != o.alive) return alive < o.alive;
        if (junk != o.junk) return junk < o.junk;
        if (to_move != o.to_move) return to_move < o.to_move;
        return taken < o.taken;
    }
};

struct BoxVerify {
    int maker_bias, breaker_bias;
    std::map<BoxKey, bool> memo;

    bool filler_wins(std::vector<int> alive, int junk, int to_move, int taken) {
        std::sort(alive.begin(), alive.end());
        if (!alive.empty() && alive.front() == 0) return true; // a box got filled
        long long total = junk;
        for (int c : alive) total += c;
        if (alive.empty() || total == 0) return false;

        BoxKey key{alive, junk, to_move, taken};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const int bias = to_move == 0 ? maker_bias : breaker_bias;
        int next_move = to_move, next_taken = taken + 1;
        if (next_taken >= bias) {
            next_move = 1 - to_move;
            next_taken = 0;
        }

        bool result;
        if (to_move == 0) {
            // Greedy filler: claim inside the smallest surviving box.
            std::vector<int> nxt = alive;
            --nxt.front();
            result = filler_wins(std::move(nxt), junk, next_move, next_taken);
        } else {
            // Opponent: destroy an alive box of any distinct size, or waste a
            // junk element. Filler wins only if every option fails for the
            // opponent, i.e. filler wins all of them.
            result = true;
            int last_size = -1;
            for (std::size_t i = 0; i < alive.size() && result; ++i) {
                if (alive[i] == last_size) continue;
                last_size = alive[i];
                std::vector<int> nxt = alive;
                nxt.erase(nxt.begin() + i);
                if (!filler_wins(std::move(nxt), junk + alive[i] - 1, next_move, next_taken))
                    result = false;
            }
            if (result && junk > 0)
                if (!filler_wins(alive, junk - 1, next_move, next_taken)) result = false;
        }
        memo[key] = result;
        return result;
    }
};

} // namespace

bool verify_box_filler(const std::vector<int>& box_sizes, int maker_bias, int breaker_bias,
                       Player first) {
    for (int s : box_sizes)
        if (s < 1) throw std::invalid_argument("box sizes must be positive");
    BoxVerify bv{maker_bias, breaker_bias, {}};
    return bv.filler_wins(box_sizes, 0, first == Player::Maker ? 0 : 1, 0);
}

// ---------------------------------------------------------------------------
// Small-board structure enumeration for solver materialization.

std::vector<Bits> all_perfect_matchings(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bits> out;
    if (n % 2 != 0) return out;
    Bits cur(g.edge_count());
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> void {
        int v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) {
            out.push_back(cur);
            return;
        }
        used[v] = 1;
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            int idx = g.edge_index(v, w);
            cur.set(idx);
            self(self);
            cur.reset(idx);
            used[w] = 0;
        }
        used[v] = 0;
    };
    rec(rec);
    return out;
}

std::vector<Bits> all_hamiltonian_cycles(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bits> out;
    if (n < 3) return out;
    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    Bits cur(g.edge_count());
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == n) {
            int back = g.edge_index(path.back(), 0);
            if (back >= 0) {
                cur.set(back);
                out.push_back(cur);
                cur.reset(back);
            }
            return;
        }
        for (int w : g.neighbors(path.back())) {
            if (used[w]) continue;
            used[w] = 1;
            int idx = g.edge_index(path.back(), w);
            path.push_back(w);
            cur.set(idx);
            self(self);
            cur.reset(idx);
            path.pop_back();
            used[w] = 0;
        }
    };
    rec(rec);
    // each cycle traversed twice (two orientations); dedup
    std::vector<Bits> dedup;
    std::unordered_map<std::size_t, std::vector<int>> seen;
    for (const Bits& b : out) {
        bool fresh = true;
        auto& bucket = seen[b.hash()];
        for (int i : bucket)
            if (dedup[i] == b) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(static_cast<int>(dedup.size()));
            dedup.push_back(b);
        }
    }
    return dedup;
}

std::vector<Bits> all_spanning_trees(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Bits> out;
    if (n == 0) return out;
    std::vector<int> chosen;
    // Enumerate (n-1)-subsets and keep the acyclic spanning ones.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            std::vector<int> parent(n);
            for (int v = 0; v < n; ++v) parent[v] = v;
            auto find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            for (int ei : chosen) {
                int a = find(g.edge(ei).u), b = find(g.edge(ei).v);
                if (a == b) return;
                parent[a] = b;
            }
            Bits t(m);
            for (int ei : chosen) t.set(ei);
            out.push_back(std::move(t));
            return;
        }
        for (int e = start; e <= m - (n - 1 - static_cast<int>(chosen.size())); ++e) {
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
        }
    };
    if (n == 1) {
        out.push_back(Bits(m));
        return out;
    }
    rec(rec, 0);
    return out;
}

} // namespace solver
} // namespace gamelab
