#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gamelab {

// Fixed-size dynamic bitset used for claim masks and winning sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (1ull << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~0ull;
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    int count_andnot(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~o.words_[i]);
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~0ull << (from & 63));
        while (true) {
            if (cur) {
                int bit = (w << 6) + std::countr_zero(cur);
                return bit < nbits_ ? bit : -1;
            }
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }

    template <typename F> void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }
    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(nbits_) * 0x9e3779b97f4a7c15ull;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    void trim() {
        int extra = static_cast<int>(words_.size()) * 64 - nbits_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~0ull >> extra;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace gamelab
