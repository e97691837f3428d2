#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qdf {

/// splitmix64 step; used to decorrelate per-realization seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic uniform in [0, 1). Drawing from the engine directly keeps
/// the stream identical across standard libraries (distributions are
/// implementation-defined).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in [-1, 1).
inline double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * uniform01(rng) - 1.0;
}

/// Standard normal via Box-Muller (deterministic for a given stream).
inline double gaussian01(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

/// Engine for one (seed, stream) pair.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    for (std::uint64_t i = 0; i <= stream; ++i) splitmix64(state);
    return std::mt19937_64(splitmix64(state));
}

}  // namespace qdf
