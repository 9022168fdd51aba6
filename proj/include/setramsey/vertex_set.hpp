#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace setramsey {

/// Fixed-size bitset over vertex indices, sized at runtime. Used for
/// adjacency rows and candidate sets in clique searches.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    static VertexSet all(int n) {
        VertexSet s(n);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
        s.clear_tail();
        return s;
    }

    int size() const { return n_; }

    bool test(int v) const {
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }
    void set(int v) { words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) if (w != 0) return false;
        return true;
    }

    void and_with(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    VertexSet intersect(const VertexSet& o) const {
        VertexSet r = *this;
        r.and_with(o);
        return r;
    }

    int intersect_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    /// Members strictly greater than v, in place.
    void keep_above(int v) {
        const int w = (v + 1) >> 6;
        for (int i = 0; i < w && i < static_cast<int>(words_.size()); ++i) words_[static_cast<std::size_t>(i)] = 0;
        if (w < static_cast<int>(words_.size())) {
            const int bit = (v + 1) & 63;
            if (bit != 0) words_[static_cast<std::size_t>(w)] &= ~std::uint64_t{0} << bit;
        }
    }

    /// Smallest member >= from; -1 if none.
    int next(int from) const {
        if (from >= n_) return -1;
        std::size_t i = static_cast<std::size_t>(from >> 6);
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) return static_cast<int>(i) * 64 + std::countr_zero(w);
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                fn(static_cast<int>(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int x) { v.push_back(x); });
        return v;
    }

    bool operator==(const VertexSet&) const = default;

private:
    void clear_tail() {
        const int tail = n_ & 63;
        if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace setramsey
