#pragma once

#include <cstdint>

#include "setconj/rational.hpp"

namespace setconj {

// Deterministic 64-bit stream used by every randomized task.  The mixing
// function is splitmix64 (Steele/Lea/Flood), chosen so that alternate
// implementations can replicate sample streams from the seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0.  Modulo bias is irrelevant for test
    // sampling and keeping the reduction trivial aids replication.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Integer in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Small exact rational: numerator in [-num_mag, num_mag], denominator in
    // [1, den_max].
    Rat rat(long long num_mag = 8, long long den_max = 4) {
        return Rat(Int(int_in(-num_mag, num_mag)), Int(int_in(1, den_max)));
    }

    RatVec rat_vec(std::size_t n, long long num_mag = 8, long long den_max = 4) {
        RatVec v(n);
        for (auto& x : v) x = rat(num_mag, den_max);
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace setconj
