#pragma once

// Deterministic, platform-independent randomness.  std::mt19937_64 has a
// pinned algorithm, but the standard distributions do not, so uniform
// sampling and shuffling are implemented here by hand.  Reproducibility of
// generation runs across compilers depends on this.

#include <cstdint>
#include <random>
#include <vector>

namespace mmp {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound) by rejection sampling; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform integer in [lo, hi], inclusive; lo <= hi.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

    // Independent child stream for run `index`, derived from the original
    // seed (not the engine state); splitmix64 finalization decorrelates
    // adjacent indices.
    SeededRng derive(std::uint64_t index) const {
        std::uint64_t z = seed_ + (index + 1) * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return SeededRng(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace mmp
