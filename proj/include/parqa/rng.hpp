// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Seed derivation. Every random decision in the library is driven by a
// 64-bit seed derived from the user's master seed through mix64(), so runs
// are reproducible and independent streams never share state. The mixer is
// the splitmix64 finalizer, which is a bijection with good avalanche.
#ifndef PARQA_RNG_HPP
#define PARQA_RNG_HPP

#include <cstdint>
#include <random>

namespace parqa {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t mix64_once(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace detail

// Derives a child seed from (seed, salt). Adding (salt + 1) * golden before
// finalizing keeps salt 0 distinct from the parent seed itself.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t salt) {
    return detail::mix64_once(seed + detail::kGolden * (salt + 1));
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(seed, a), b);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                           std::uint64_t c) {
    return mix64(mix64(seed, a, b), c);
}

// Salts for the top-level derivation domains, so streams for different
// purposes cannot collide even for equal indices. Second-level salts are the
// loop indices at the call site.
enum Stream : std::uint64_t {
    kStreamGraph = 1,
    kStreamRead = 2,
    kStreamCall = 3,
    kStreamUnembed = 4,
    kStreamEmbedder = 5,
    kStreamDensity = 6,
    kStreamProblem = 7,
};

// Maps a uniform u64 to a double in [0, 1) using the top 53 bits. Unlike
// std::uniform_real_distribution this is pinned down by the standard's
// mt19937_64 sequence alone, so results are identical across library
// implementations.
inline double canonical_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double next_double(std::mt19937_64& rng) { return canonical_double(rng()); }

// Uniform integer in [0, n) by rejection; n must be positive.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace parqa

#endif
