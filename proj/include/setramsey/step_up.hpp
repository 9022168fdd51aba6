#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "setramsey/coloring.hpp"

namespace setramsey {

/// Index of the most significant bit where u and v differ; requires u != v.
inline int delta(std::uint64_t u, std::uint64_t v) {
    if (u == v) throw std::invalid_argument("delta: arguments must differ");
    return std::bit_width(u ^ v) - 1;
}

/// Case labels for the delta sequence of a lifted tuple.
enum class StepUpCase { monotone, local_max, local_min, case_a, case_b, case_c };

/// The delta sequence of consecutive vertices plus its case label.
struct StepUpTrace {
    std::vector<int> deltas;
    StepUpCase label = StepUpCase::monotone;
};

namespace detail {

inline bool deltas_monotone(std::span<const int> d) {
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        inc = inc && d[i] < d[i + 1];
        dec = dec && d[i] > d[i + 1];
    }
    return inc || dec;
}

inline std::vector<int> delta_sequence(std::span<const std::uint64_t> tuple) {
    std::vector<int> d(tuple.size() - 1);
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) d[i] = delta(tuple[i], tuple[i + 1]);
    return d;
}

} // namespace detail

/// Lifts a graph coloring on N vertices to a 3-uniform coloring of the
/// complete hypergraph on 2^N vertices with palette doubled to 2r: the triple
/// u < v < w takes the base colors of the edge {delta(u,v), delta(v,w)},
/// shifted by +r when delta(u,v) > delta(v,w). A base with no monochromatic
/// K_n lifts to a coloring with no monochromatic K_{n+1}.
inline SetColoring step_up_graph_to_3(const SetColoring& base,
                                      std::uint64_t edge_limit = kDefaultEdgeLimit) {
    if (base.uniformity != 2) throw std::invalid_argument("step_up_graph_to_3: base must have k = 2");
    if (base.num_vertices > 20)
        throw ResourceLimitError("step_up_graph_to_3: 2^N vertex count too large");
    const int big_n = 1 << base.num_vertices;
    const int r = base.num_colors;
    if (2 * r > ColorSet::kCapacity)
        throw ResourceLimitError("step_up_graph_to_3: doubled palette exceeds 128 colors");

    return build_coloring(
        3, big_n, 2 * r, base.colors_per_edge, base.slack,
        [&](std::span<const int> edge) {
            const int d1 = delta(static_cast<std::uint64_t>(edge[0]),
                                 static_cast<std::uint64_t>(edge[1]));
            const int d2 = delta(static_cast<std::uint64_t>(edge[1]),
                                 static_cast<std::uint64_t>(edge[2]));
            const ColorSet& base_set =
                base.colors_of_pair(std::min(d1, d2), std::max(d1, d2));
            if (d1 < d2) return base_set;
            ColorSet shifted;
            base_set.for_each([&](int c) { shifted.set(c + r); });
            return shifted;
        },
        edge_limit);
}

/// Classifies the delta sequence of a (k+1)-tuple for the k -> k+1 step-up:
/// monotone, or first non-monotone triple a local maximum / local minimum.
inline StepUpTrace step_up_trace_k(std::span<const std::uint64_t> tuple) {
    StepUpTrace trace;
    trace.deltas = detail::delta_sequence(tuple);
    const auto& d = trace.deltas;
    if (detail::deltas_monotone(d)) {
        trace.label = StepUpCase::monotone;
        return trace;
    }
    for (std::size_t i = 0; i + 2 < d.size(); ++i) {
        if (d[i] < d[i + 1] && d[i + 1] > d[i + 2]) {
            trace.label = StepUpCase::local_max;
            return trace;
        }
        if (d[i] > d[i + 1] && d[i + 1] < d[i + 2]) {
            trace.label = StepUpCase::local_min;
            return trace;
        }
    }
    throw std::logic_error("step_up_trace_k: non-monotone sequence without a turning point");
}

/// Lexicographically least pair of disjoint s-subsets of {0..r-1}.
inline std::pair<ColorSet, ColorSet> default_disjoint_pair(int r, int s) {
    if (2 * s > r) throw std::invalid_argument("default_disjoint_pair: requires s <= r/2");
    return {ColorSet::range(0, s), ColorSet::range(s, s)};
}

/// Lifts a k-uniform coloring (k >= 3, s <= r/2) to a (k+1)-uniform coloring
/// on 2^N vertices with the same palette: monotone delta sequences inherit
/// the base color set of their delta k-set; the first non-monotone triple
/// decides between the fixed disjoint sets d1 (local maximum) and d2 (local
/// minimum). A base with no monochromatic K_n lifts with no K_{2n-1}.
inline SetColoring step_up_k(const SetColoring& base, const ColorSet& d1, const ColorSet& d2,
                             std::uint64_t edge_limit = kDefaultEdgeLimit) {
    if (base.uniformity < 3) throw std::invalid_argument("step_up_k: base must have k >= 3");
    if (base.slack) throw std::invalid_argument("step_up_k: base must be non-slack");
    const int r = base.num_colors;
    const int s = base.colors_per_edge;
    if (2 * s > r) throw std::invalid_argument("step_up_k: requires s <= r/2");
    if (d1.count() != s || d2.count() != s || d1.intersects(d2))
        throw std::invalid_argument("step_up_k: d1, d2 must be disjoint s-subsets");
    if (!d1.is_subset_of(ColorSet::range(0, r)) || !d2.is_subset_of(ColorSet::range(0, r)))
        throw std::invalid_argument("step_up_k: d1, d2 must lie inside the palette");
    if (base.num_vertices > 20)
        throw ResourceLimitError("step_up_k: 2^N vertex count too large");
    const int big_n = 1 << base.num_vertices;

    return build_coloring(
        base.uniformity + 1, big_n, r, s, false,
        [&](std::span<const int> edge) {
            std::vector<std::uint64_t> tuple(edge.begin(), edge.end());
            const StepUpTrace trace = step_up_trace_k(tuple);
            switch (trace.label) {
                case StepUpCase::local_max: return d1;
                case StepUpCase::local_min: return d2;
                default: {
                    std::vector<int> base_edge = trace.deltas;
                    std::sort(base_edge.begin(), base_edge.end());
                    return base.colors_of(base_edge);
                }
            }
        },
        edge_limit);
}

inline SetColoring step_up_k(const SetColoring& base,
                             std::uint64_t edge_limit = kDefaultEdgeLimit) {
    const auto [d1, d2] = default_disjoint_pair(base.num_colors, base.colors_per_edge);
    return step_up_k(base, d1, d2, edge_limit);
}

/// Classifies the delta sequence (d1, d2, d3) of a 4-tuple for the 3 -> 4
/// step-up. Adjacent deltas never tie; a local minimum with d1 = d3 cannot
/// occur for an increasing vertex tuple, so the four cases below are
/// exhaustive.
inline StepUpTrace step_up_trace_3_to_4(std::span<const std::uint64_t> tuple) {
    if (tuple.size() != 4) throw std::invalid_argument("step_up_trace_3_to_4: need a 4-tuple");
    StepUpTrace trace;
    trace.deltas = detail::delta_sequence(tuple);
    const int d1 = trace.deltas[0], d2 = trace.deltas[1], d3 = trace.deltas[2];
    if (detail::deltas_monotone(trace.deltas))
        trace.label = StepUpCase::monotone;
    else if (d2 > d1 && d2 > d3)
        trace.label = StepUpCase::case_c;
    else if (d3 > d1)
        trace.label = StepUpCase::case_a; // d3 > d1 > d2
    else if (d1 > d3)
        trace.label = StepUpCase::case_b; // d1 > d3 > d2
    else
        throw std::logic_error("step_up_trace_3_to_4: impossible delta pattern");
    return trace;
}

/// Greedy lexicographically least triple (A, B, C) of s-subsets of {0..r-1}
/// with A intersect B intersect C empty; possible whenever s <= 2r/3.
/// A = {0..s-1}; B keeps the first min(s, r-s) colors of A (any more overlap
/// would leave C no room) and continues from color s; C is the lex-least
/// s-set avoiding A intersect B.
inline std::array<ColorSet, 3> default_triple_sets(int r, int s) {
    if (3 * s > 2 * r) throw std::invalid_argument("default_triple_sets: requires s <= 2r/3");
    const ColorSet a = ColorSet::range(0, s);
    const int t = std::min(s, r - s);
    ColorSet b;
    for (int c = 0; c < t; ++c) b.set(c);
    for (int c = s; b.count() < s; ++c) b.set(c);
    const ColorSet ab = a.intersect(b);
    ColorSet c_set;
    for (int c = 0; c < r && c_set.count() < s; ++c)
        if (!ab.test(c)) c_set.set(c);
    return {a, b, c_set};
}

/// Lifts a 3-uniform coloring (s <= 2r/3) to a 4-uniform coloring on 2^N
/// vertices: monotone delta sequences inherit the base set of their delta
/// triple; the patterns d3 > d1 > d2, d1 > d3 > d2 and d2 > max(d1, d3)
/// receive the fixed sets A, B and C, whose triple intersection is empty.
/// A base with no monochromatic K_n lifts with no K_{2n^2}.
inline SetColoring step_up_3_to_4(const SetColoring& base, const ColorSet& set_a,
                                  const ColorSet& set_b, const ColorSet& set_c,
                                  std::uint64_t edge_limit = kDefaultEdgeLimit) {
    if (base.uniformity != 3) throw std::invalid_argument("step_up_3_to_4: base must have k = 3");
    if (base.slack) throw std::invalid_argument("step_up_3_to_4: base must be non-slack");
    const int r = base.num_colors;
    const int s = base.colors_per_edge;
    if (3 * s > 2 * r) throw std::invalid_argument("step_up_3_to_4: requires s <= 2r/3");
    const ColorSet palette = ColorSet::range(0, r);
    for (const ColorSet* cs : {&set_a, &set_b, &set_c}) {
        if (cs->count() != s) throw std::invalid_argument("step_up_3_to_4: A, B, C must be s-sets");
        if (!cs->is_subset_of(palette))
            throw std::invalid_argument("step_up_3_to_4: A, B, C must lie inside the palette");
    }
    if (!set_a.intersect(set_b).intersect(set_c).empty())
        throw std::invalid_argument("step_up_3_to_4: A, B, C must have empty triple intersection");
    if (base.num_vertices > 20)
        throw ResourceLimitError("step_up_3_to_4: 2^N vertex count too large");
    const int big_n = 1 << base.num_vertices;

    return build_coloring(
        4, big_n, r, s, false,
        [&](std::span<const int> edge) {
            std::vector<std::uint64_t> tuple(edge.begin(), edge.end());
            const StepUpTrace trace = step_up_trace_3_to_4(tuple);
            switch (trace.label) {
                case StepUpCase::case_a: return set_a;
                case StepUpCase::case_b: return set_b;
                case StepUpCase::case_c: return set_c;
                default: {
                    std::vector<int> base_edge = trace.deltas;
                    std::sort(base_edge.begin(), base_edge.end());
                    return base.colors_of(base_edge);
                }
            }
        },
        edge_limit);
}

inline SetColoring step_up_3_to_4(const SetColoring& base,
                                  std::uint64_t edge_limit = kDefaultEdgeLimit) {
    const auto abc = default_triple_sets(base.num_colors, base.colors_per_edge);
    return step_up_3_to_4(base, abc[0], abc[1], abc[2], edge_limit);
}

// ---------------------------------------------------------------------------
// Exhaustive checks of the two structural facts the step-ups rest on:
//   I.  delta(u,v) != delta(v,w) for u < v < w;
//   II. delta(v_1,v_r) = max of consecutive deltas along any chain.
// ---------------------------------------------------------------------------

/// Fused direct check of Properties I and II over every triple u < v < w of
/// {0..2^bits-1}. At bits = 12 this is ~1.1e10 triples, so the outer loop is
/// split across threads.
inline bool verify_delta_properties_triples(int bits, unsigned num_threads = 0) {
    if (bits < 2 || bits > 20)
        throw std::invalid_argument("verify_delta_properties_triples: bits out of range");
    const std::uint32_t v_count = std::uint32_t{1} << bits;
    if (num_threads == 0) num_threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<bool> ok{true};
    auto worker = [&](unsigned tid) {
        bool good = true;
        for (std::uint32_t w = tid; w < v_count; w += num_threads) {
            for (std::uint32_t v = 0; v < w; ++v) {
                const int d2 = std::bit_width(v ^ w) - 1;
                for (std::uint32_t u = 0; u < v; ++u) {
                    const int d1 = std::bit_width(u ^ v) - 1;
                    const int d3 = std::bit_width(u ^ w) - 1;
                    good &= (d1 != d2) & (d3 == (d1 > d2 ? d1 : d2));
                }
            }
            if (!good) break;
        }
        if (!good) ok = false;
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < num_threads; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
    return ok.load();
}

/// Exhaustive Property II check over every increasing chain of `chain_len`
/// vertices from {0..2^bits-1}: the end-to-end delta equals the maximum of
/// the consecutive deltas.
inline bool verify_delta_property_two_chains(int bits, int chain_len) {
    if (chain_len < 2) throw std::invalid_argument("chain length must be >= 2");
    const int v_count = 1 << bits;
    bool ok = true;
    std::vector<int> chain;
    auto rec = [&](auto&& self, int last) -> void {
        if (!ok) return;
        if (static_cast<int>(chain.size()) == chain_len) {
            int max_step = -1;
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                max_step = std::max(max_step,
                                    delta(static_cast<std::uint64_t>(chain[i]),
                                          static_cast<std::uint64_t>(chain[i + 1])));
            if (delta(static_cast<std::uint64_t>(chain.front()),
                      static_cast<std::uint64_t>(chain.back())) != max_step)
                ok = false;
            return;
        }
        for (int v = last + 1; v < v_count; ++v) {
            chain.push_back(v);
            self(self, v);
            chain.pop_back();
        }
    };
    rec(rec, -1);
    return ok;
}

} // namespace setramsey
