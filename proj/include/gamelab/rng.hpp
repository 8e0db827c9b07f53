#pragma once

#include <cstdint>
#include <random>

namespace gamelab {

// Master seed for a whole run. Same seed => bit-identical streams.
struct Seed {
    std::uint64_t master = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stream-splitting rule: stream i of master seed s is
// splitmix64(splitmix64(s) ^ splitmix64(i + 1)). Used for per-trial and
// per-grid-point substreams so parallel runs reproduce exactly.
Seed derive(Seed s, std::uint64_t index);

// mt19937_64 raw output is pinned by the standard; the bounded draws below
// are implemented here (not via std distributions, which vary by vendor).
class Rng {
public:
    explicit Rng(Seed s) : engine_(splitmix64(s.master ^ 0x6a09e667f3bcc908ull)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw in [0, n), n >= 1. Rejection sampling.
    std::uint64_t below(std::uint64_t n);

    // Inclusive range.
    int uniform_int(int lo, int hi);

    // [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace gamelab
