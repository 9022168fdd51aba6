#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace setramsey {

/// A set of colors out of a palette of at most 128, stored as a flat bitmask.
/// Membership, intersection and cardinality are O(1).
struct ColorSet {
    static constexpr int kCapacity = 128;

    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static ColorSet of(std::initializer_list<int> colors) {
        ColorSet s;
        for (int c : colors) s.set(c);
        return s;
    }

    /// {first, first+1, ..., first+count-1}
    static ColorSet range(int first, int count) {
        ColorSet s;
        for (int c = first; c < first + count; ++c) s.set(c);
        return s;
    }

    bool test(int c) const {
        return c < 64 ? ((lo >> c) & 1u) != 0 : ((hi >> (c - 64)) & 1u) != 0;
    }

    void set(int c) {
        if (c < 0 || c >= kCapacity) throw std::out_of_range("ColorSet: color out of range");
        if (c < 64)
            lo |= std::uint64_t{1} << c;
        else
            hi |= std::uint64_t{1} << (c - 64);
    }

    void reset(int c) {
        if (c < 64)
            lo &= ~(std::uint64_t{1} << c);
        else
            hi &= ~(std::uint64_t{1} << (c - 64));
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return lo == 0 && hi == 0; }

    bool intersects(const ColorSet& o) const { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }
    bool is_subset_of(const ColorSet& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    ColorSet intersect(const ColorSet& o) const { return {lo & o.lo, hi & o.hi}; }
    ColorSet unite(const ColorSet& o) const { return {lo | o.lo, hi | o.hi}; }
    ColorSet minus(const ColorSet& o) const { return {lo & ~o.lo, hi & ~o.hi}; }

    /// Smallest member; -1 when empty.
    int lowest() const {
        if (lo != 0) return std::countr_zero(lo);
        if (hi != 0) return 64 + std::countr_zero(hi);
        return -1;
    }

    /// Largest member; -1 when empty.
    int highest() const {
        if (hi != 0) return 127 - std::countl_zero(hi);
        if (lo != 0) return 63 - std::countl_zero(lo);
        return -1;
    }

    /// The k smallest members (k <= count()).
    ColorSet lowest_k(int k) const {
        ColorSet out;
        std::uint64_t w = lo;
        int base = 0;
        while (k > 0) {
            if (w == 0) {
                if (base == 0) {
                    w = hi;
                    base = 64;
                    continue;
                }
                break;
            }
            const int c = base + std::countr_zero(w);
            out.set(c);
            w &= w - 1;
            --k;
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        std::uint64_t w = lo;
        while (w != 0) {
            fn(std::countr_zero(w));
            w &= w - 1;
        }
        w = hi;
        while (w != 0) {
            fn(64 + std::countr_zero(w));
            w &= w - 1;
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int c) { v.push_back(c); });
        return v;
    }

    bool operator==(const ColorSet&) const = default;
};

/// Lexicographic order on the ascending member sequences,
/// e.g. {0,3} < {1,2} and {0,2} < {0,3}.
inline bool lex_less(const ColorSet& a, const ColorSet& b) {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

} // namespace setramsey
