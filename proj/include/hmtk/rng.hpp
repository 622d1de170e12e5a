#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace hmtk {

// Counter-based generator. Every draw is a pure function of (seed, stream,
// index), so sampling is reproducible no matter how loops are scheduled.

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t rng_bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(mix64(seed) ^ stream) ^ index);
}

// Uniform in [0, 1).
inline double rng_u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return static_cast<double>(rng_bits(seed, stream, index) >> 11) * 0x1.0p-53;
}

// Uniform w.r.t. area on |z| <= radius. Consumes indices 2k and 2k+1.
inline std::complex<double> rng_in_disk(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t index, double radius = 1.0) {
    const double u = rng_u01(seed, stream, 2 * index);
    const double v = rng_u01(seed, stream, 2 * index + 1);
    const double r = radius * std::sqrt(u);
    const double phi = 2.0 * std::numbers::pi * v;
    return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace hmtk
