#pragma once

#include <vector>

#include "gamelab/family.hpp"
#include "gamelab/game.hpp"

namespace gamelab {

// Sum of (1+b)^(-|A|/a) with the blocking verdict for the requested
// first player.
struct PotentialReport {
    double total = 0.0;
    std::vector<double> per_set; // aligned with family.sets()
    bool satisfied = false;
    double threshold = 1.0;
};

// satisfied <=> total < 1 (claimer-second) or < 1/(1+b) (claimer-first).
// `first` names who moves first; the blocker claims b per turn.
PotentialReport es_condition(const WinningFamily& family, int a, int b, Player first);

// satisfied <=> total < c/(1+b): the blocker can hit every union of c
// winning sets.
PotentialReport gen_es_condition(const WinningFamily& family, int a, int b, int c);

struct RandomizedEsParams {
    int b = 1;
    double p = 0.0;
    double delta = 0.0;
    double sum = 0.0;           // sum of 2^(-|A|/b)
    double min_ratio = 0.0;     // min |A| / b
    double p_lower_bound = 0.0; // 4 ln 2 / (delta^2 b)
    bool sum_ok = false;
    bool p_ok = false;
    bool satisfied = false;
    int derived_bias = 0; // floor((1-delta) p b)
};

// Feasibility of the thinned-board blocking criterion; never throws on
// infeasible inputs (satisfied=false instead).
RandomizedEsParams randomized_es_feasibility(const WinningFamily& family, int b, double p,
                                             double delta);

// Incremental potential tracker for a transversal blocker. The claimer
// grows sets toward completion; the blocker kills a set by claiming any of
// its elements. Terms are (1 + blocker_weight)^(-missing / claimer_bias);
// a set's gain is credited to each of its elements while it is alive.
class EsBlockerEngine {
public:
    EsBlockerEngine() = default;
    EsBlockerEngine(const std::vector<Bits>* sets, int board_size, int claimer_bias,
                    int blocker_weight);

    // Bring the engine in sync with the claim masks. Handles claims being
    // retracted too, so verification search can reuse one engine.
    void observe(const Bits& claimer, const Bits& blocker);

    // Free element with the largest potential decrease, lowest index on
    // ties; -1 when no free element exists.
    int best_free(const Bits& free) const;

    double phi() const { return phi_; }
    double gain(int e) const { return gain_[e]; }

private:
    void claimer_add(int e);
    void claimer_remove(int e);
    void blocker_add(int e);
    void blocker_remove(int e);
    double term(int s) const { return pow_table_[missing_[s]]; }

    const std::vector<Bits>* sets_ = nullptr;
    int board_size_ = 0;
    std::vector<std::vector<int>> sets_of_;
    std::vector<int> missing_;       // |A| - |A ∩ claimer|
    std::vector<int> blocker_count_; // |A ∩ blocker|; alive iff 0
    std::vector<double> gain_;
    std::vector<double> pow_table_; // (1+w)^(-m/a) by missing count m
    double phi_ = 0.0;
    Bits seen_claimer_;
    Bits seen_blocker_;
};

} // namespace gamelab
