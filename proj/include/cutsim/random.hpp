#pragma once

#include <cstdint>
#include <random>

namespace cutsim {

/// splitmix64 finalizer. Fixed public mixing function so that derived seeds
/// are reproducible across platforms and library versions.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives the seed for sub-task `index` from a master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Uniform integer in [0, bound). Implemented directly on the raw 64-bit
/// stream (Lemire multiply-shift) so results do not depend on the standard
/// library's distribution internals.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t reject = (0 - bound) % bound; // 2^64 mod bound
    while (true) {
        std::uint64_t x = rng();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        if (static_cast<std::uint64_t>(m) >= reject)
            return static_cast<std::uint64_t>(m >> 64);
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace cutsim
