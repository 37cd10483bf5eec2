#ifndef BRK_RNG_HPP
#define BRK_RNG_HPP

#include <cstdint>
#include <vector>

#include "brk/rational.hpp"

namespace brkit {

// SplitMix64. Small, fully portable, and every consumer takes an explicit
// seed so reports are reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97f4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Integer coordinate for a generic evaluation point.
    long coord() { return range(-97, 97); }

    // Small nonzero coefficient for pivot combinations.
    long small_nonzero() {
        long v = range(1, 3);
        return (next() & 1) ? v : -v;
    }

    std::vector<Rat> point(int n) {
        std::vector<Rat> pt;
        pt.reserve(n);
        for (int i = 0; i < n; ++i) pt.emplace_back(coord());
        return pt;
    }

private:
    std::uint64_t state_;
};

}  // namespace brkit

#endif
