#pragma once

#include <cstdint>

#include "ordercone/rational.hpp"

namespace ordercone {

// splitmix64. Identical seeds give identical streams on every platform,
// which the seeded suites and the CLI byte-determinism guarantee rely on;
// <random> distributions are implementation-defined and unusable here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Rational in [-1, 1] with denominator at most max_den.
    Rat unit_rat(int max_den = 6) {
        const long long d = int_in(1, max_den);
        const long long n = int_in(-d, d);
        return Rat(n, d);
    }

    Vec vec(std::size_t dim, long long lo, long long hi) {
        Vec v(dim);
        for (auto& x : v) x = Rat(int_in(lo, hi));
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace ordercone
