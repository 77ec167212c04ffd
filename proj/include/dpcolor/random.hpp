#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace dpcolor {

/// The engine's output sequence is fixed by the standard; the bounded draw
/// below is too, so seeded results are identical on every platform.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace dpcolor
