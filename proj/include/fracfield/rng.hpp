#pragma once

#include <cstdint>

#include "fracfield/grid.hpp"

namespace fracfield {

/// SplitMix64. Small, seedable, and platform-stable, so seeded suites
/// produce byte-identical output everywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

inline void fill_random(ScalarField& f, Rng& rng) {
    for (auto& v : f.data) v = rng.symmetric();
}

inline ScalarField random_field(const Grid& g, Rng& rng) {
    ScalarField f(g);
    fill_random(f, rng);
    return f;
}

} // namespace fracfield
