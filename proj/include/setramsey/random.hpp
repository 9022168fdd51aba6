#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "setramsey/coloring.hpp"

namespace setramsey {

/// Uniform draw from [0, bound) by rejection on raw 64-bit outputs.
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws are done by hand to keep seeded runs reproducible everywhere.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniformly random s-subset of {0..r-1} via a partial Fisher-Yates shuffle.
inline ColorSet random_color_subset(std::mt19937_64& rng, int r, int s) {
    std::vector<int> pool(static_cast<std::size_t>(r));
    std::iota(pool.begin(), pool.end(), 0);
    ColorSet out;
    for (int i = 0; i < s; ++i) {
        const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out.set(pool[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// Independent uniform s-subsets on every edge; fully determined by `seed`.
inline SetColoring random_set_coloring(int k, int N, int r, int s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return build_coloring(k, N, r, s, false,
                          [&](std::span<const int>) { return random_color_subset(rng, r, s); });
}

} // namespace setramsey
