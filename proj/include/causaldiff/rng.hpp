#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "causaldiff/errors.hpp"

namespace causaldiff {

/// splitmix64 step; used to derive independent per-chunk seeds from a
/// user seed so that parallel sampling is reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ull + stream * 0x3c6ef372fe94f82bull);
    return splitmix64(s);
}

/// Uniform double in [0, 1) with 53 random bits; pinned bit pattern,
/// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform direction on the unit sphere of R^dim (third component unused
/// below dim 3). dim=1 is the two-point sphere {−1, +1}, dim=2 a uniform
/// angle, dim=3 a normalized Gaussian triple (Box-Muller from pinned
/// uniforms, so the stream is reproducible bit for bit).
inline std::array<double, 3> sphere_direction(int dim, std::mt19937_64& rng) {
    switch (dim) {
    case 1:
        return {uniform01(rng) < 0.5 ? -1.0 : 1.0, 0.0, 0.0};
    case 2: {
        const double phi = 2.0 * M_PI * uniform01(rng);
        return {std::cos(phi), std::sin(phi), 0.0};
    }
    case 3: {
        double g[4];
        for (int pair = 0; pair < 2; ++pair) {
            double u1 = uniform01(rng);
            while (u1 <= 0.0) {
                u1 = uniform01(rng);
            }
            const double u2 = uniform01(rng);
            const double rad = std::sqrt(-2.0 * std::log(u1));
            g[2 * pair] = rad * std::cos(2.0 * M_PI * u2);
            g[2 * pair + 1] = rad * std::sin(2.0 * M_PI * u2);
        }
        double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        while (norm < 1e-300) { // essentially impossible, but keep it total
            g[0] = 1.0;
            g[1] = 0.0;
            g[2] = 0.0;
            norm = 1.0;
        }
        return {g[0] / norm, g[1] / norm, g[2] / norm};
    }
    default:
        throw UnsupportedDimensionError("sphere_direction: dim must be 1, 2 or 3");
    }
}

} // namespace causaldiff
