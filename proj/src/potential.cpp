#include "gamelab/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace gamelab {

namespace {

PotentialReport sum_report(const WinningFamily& family, int a, int b) {
    if (!family.is_explicit())
        throw std::invalid_argument("potential: oracle families have no set sum");
    if (a < 1 || b < 1) throw std::invalid_argument("potential: biases must be at least 1");
    PotentialReport r;
    r.per_set.reserve(family.set_count());
    for (const Bits& s : family.sets()) {
        double t = std::pow(1.0 + b, -static_cast<double>(s.count()) / a);
        r.per_set.push_back(t);
        r.total += t;
    }
    return r;
}

} // namespace

PotentialReport es_condition(const WinningFamily& family, int a, int b, Player first) {
    PotentialReport r = sum_report(family, a, b);
    r.threshold = first == Player::Breaker ? 1.0 : 1.0 / (1.0 + b);
    r.satisfied = r.total < r.threshold;
    return r;
}

PotentialReport gen_es_condition(const WinningFamily& family, int a, int b, int c) {
    if (c < 1) throw std::invalid_argument("gen_es_condition: c must be at least 1");
    PotentialReport r = sum_report(family, a, b);
    r.threshold = static_cast<double>(c) / (1.0 + b);
    r.satisfied = r.total < r.threshold;
    return r;
}

RandomizedEsParams randomized_es_feasibility(const WinningFamily& family, int b, double p,
                                             double delta) {
    if (!family.is_explicit())
        throw std::invalid_argument("randomized_es_feasibility: explicit family required");
    if (b < 1) throw std::invalid_argument("randomized_es_feasibility: b must be at least 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("randomized_es_feasibility: delta must be in (0,1)");
    RandomizedEsParams r;
    r.b = b;
    r.p = p;
    r.delta = delta;
    bool first = true;
    for (const Bits& s : family.sets()) {
        double ratio = static_cast<double>(s.count()) / b;
        r.sum += std::pow(2.0, -ratio);
        if (first || ratio < r.min_ratio) r.min_ratio = ratio;
        first = false;
    }
    r.p_lower_bound = 4.0 * std::log(2.0) / (delta * delta * b);
    r.sum_ok = r.sum < 1.0;
    r.p_ok = p > r.p_lower_bound;
    r.satisfied = r.sum_ok && r.p_ok;
    r.derived_bias = static_cast<int>(std::floor((1.0 - delta) * p * b));
    return r;
}

EsBlockerEngine::EsBlockerEngine(const std::vector<Bits>* sets, int board_size,
                                 int claimer_bias, int blocker_weight)
    : sets_(sets), board_size_(board_size), sets_of_(board_size),
      missing_(sets->size()), blocker_count_(sets->size(), 0), gain_(board_size, 0.0),
      seen_claimer_(board_size), seen_blocker_(board_size) {
    if (claimer_bias < 1 || blocker_weight < 1)
        throw std::invalid_argument("blocker engine: biases must be at least 1");
    int max_size = 0;
    for (const Bits& s : *sets) max_size = std::max(max_size, s.count());
    pow_table_.resize(max_size + 1);
    for (int m = 0; m <= max_size; ++m)
        pow_table_[m] = std::pow(1.0 + blocker_weight, -static_cast<double>(m) / claimer_bias);
    for (std::size_t s = 0; s < sets->size(); ++s) {
        missing_[s] = (*sets)[s].count();
        (*sets)[s].for_each([&](int e) { sets_of_[e].push_back(static_cast<int>(s)); });
        double t = term(static_cast<int>(s));
        phi_ += t;
        (*sets)[s].for_each([&](int e) { gain_[e] += t; });
    }
}

void EsBlockerEngine::observe(const Bits& claimer, const Bits& blocker) {
    for (int e = 0; e < board_size_; ++e) {
        if (claimer.test(e) != seen_claimer_.test(e)) {
            if (claimer.test(e)) {
                claimer_add(e);
                seen_claimer_.set(e);
            } else {
                claimer_remove(e);
                seen_claimer_.reset(e);
            }
        }
        if (blocker.test(e) != seen_blocker_.test(e)) {
            if (blocker.test(e)) {
                blocker_add(e);
                seen_blocker_.set(e);
            } else {
                blocker_remove(e);
                seen_blocker_.reset(e);
            }
        }
    }
}

void EsBlockerEngine::claimer_add(int e) {
    for (int s : sets_of_[e]) {
        double old_t = term(s);
        --missing_[s];
        double new_t = term(s);
        if (blocker_count_[s] == 0) {
            phi_ += new_t - old_t;
            (*sets_)[s].for_each([&](int x) { gain_[x] += new_t - old_t; });
        }
    }
}

void EsBlockerEngine::claimer_remove(int e) {
    for (int s : sets_of_[e]) {
        double old_t = term(s);
        ++missing_[s];
        double new_t = term(s);
        if (blocker_count_[s] == 0) {
            phi_ += new_t - old_t;
            (*sets_)[s].for_each([&](int x) { gain_[x] += new_t - old_t; });
        }
    }
}

void EsBlockerEngine::blocker_add(int e) {
    for (int s : sets_of_[e]) {
        if (blocker_count_[s]++ == 0) {
            double t = term(s);
            phi_ -= t;
            (*sets_)[s].for_each([&](int x) { gain_[x] -= t; });
        }
    }
}

void EsBlockerEngine::blocker_remove(int e) {
    for (int s : sets_of_[e]) {
        if (--blocker_count_[s] == 0) {
            double t = term(s);
            phi_ += t;
            (*sets_)[s].for_each([&](int x) { gain_[x] += t; });
        }
    }
}

int EsBlockerEngine::best_free(const Bits& free) const {
    int best = -1;
    double best_gain = -1.0;
    for (int e = free.next(0); e >= 0; e = free.next(e + 1))
        if (gain_[e] > best_gain + 1e-15) {
            best_gain = gain_[e];
            best = e;
        }
    return best;
}

} // namespace gamelab
