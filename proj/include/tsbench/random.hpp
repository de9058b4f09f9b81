#pragma once

#include <cstdint>
#include <random>

namespace tsbench {

/// Uniform integer in [0, n) drawn from `rng` by rejection sampling.
/// Unlike std::uniform_int_distribution, the draw sequence depends only on
/// the mt19937_64 stream, so seeded runs reproduce across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

} // namespace tsbench
