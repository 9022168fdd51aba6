#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "setramsey/errors.hpp"

namespace setramsey {

/// C(n, k) in 64 bits; throws ResourceLimitError on overflow.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
        if (result > static_cast<unsigned __int128>(UINT64_MAX))
            throw ResourceLimitError("binomial_u64: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

/// Rank of a sorted k-subset in colexicographic order: sum of C(v_i, i), i = 1..k.
inline std::uint64_t colex_rank(std::span<const int> subset) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        rank += binomial_u64(static_cast<std::uint64_t>(subset[i]), i + 1);
    return rank;
}

/// Inverse of colex_rank for subsets of size k.
inline std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        int v = i - 1;
        while (binomial_u64(static_cast<std::uint64_t>(v + 1), static_cast<std::uint64_t>(i)) <= rank)
            ++v;
        subset[static_cast<std::size_t>(i - 1)] = v;
        rank -= binomial_u64(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(i));
    }
    return subset;
}

/// Colex rank of the pair {u, v} with u < v.
inline std::uint64_t pair_rank(int u, int v) {
    return static_cast<std::uint64_t>(v) * (static_cast<std::uint64_t>(v) - 1) / 2 +
           static_cast<std::uint64_t>(u);
}

/// Advances `subset` (sorted, over {0..n-1}) to its colex successor.
/// Returns false when the last subset was already reached.
inline bool next_k_subset(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    int i = 0;
    while (i + 1 < k && subset[static_cast<std::size_t>(i)] + 1 == subset[static_cast<std::size_t>(i + 1)]) {
        subset[static_cast<std::size_t>(i)] = i;
        ++i;
    }
    if (subset[static_cast<std::size_t>(i)] + 1 >= (i + 1 < k ? subset[static_cast<std::size_t>(i + 1)] : n))
        return false;
    ++subset[static_cast<std::size_t>(i)];
    return true;
}

inline std::vector<int> first_k_subset(int k) {
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    return subset;
}

/// Calls fn(subset) for every k-subset of {0..n-1} in colexicographic order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k > n || k <= 0) return;
    std::vector<int> subset = first_k_subset(k);
    do {
        fn(static_cast<std::span<const int>>(subset));
    } while (next_k_subset(subset, n));
}

} // namespace setramsey
