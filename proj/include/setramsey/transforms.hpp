#pragma once

#include <stdexcept>
#include <string>

#include "setramsey/coloring.hpp"

namespace setramsey {

/// Shrinks every edge's color set to its s smallest members. Deterministic,
/// removes colors only. Fails if some edge carries fewer than s colors.
inline SetColoring trim_to_exact(const SetColoring& c) {
    SetColoring out = c;
    out.slack = false;
    std::uint64_t rank = 0;
    for (ColorSet& cs : out.edge_colors) {
        if (cs.count() < c.colors_per_edge)
            throw std::invalid_argument("trim_to_exact: edge at rank " + std::to_string(rank) +
                                        " has fewer than s colors");
        cs = cs.lowest_k(c.colors_per_edge);
        ++rank;
    }
    return out;
}

/// Replaces color i by the block {t*i, ..., t*i+t-1}, turning an (r, s)
/// coloring into a (t*r, t*s) one. Monochromatic n-cliques are preserved
/// exactly in both directions.
inline SetColoring duplicate_colors(const SetColoring& c, int t) {
    if (t < 1) throw std::invalid_argument("duplicate_colors: t must be >= 1");
    if (t == 1) return c;
    const int new_r = c.num_colors * t;
    if (new_r > ColorSet::kCapacity)
        throw ResourceLimitError("duplicate_colors: t*r exceeds the 128-color palette cap");
    SetColoring out = c;
    out.num_colors = new_r;
    out.colors_per_edge = c.colors_per_edge * t;
    for (ColorSet& cs : out.edge_colors) {
        ColorSet expanded;
        cs.for_each([&](int color) {
            for (int j = 0; j < t; ++j) expanded.set(color * t + j);
        });
        cs = expanded;
    }
    return out;
}

/// Removes `dropped` from every edge carrying it and the largest color from
/// every other edge, then reindexes the remaining palette {0..r-2} in order.
/// Produces an (r-1, s-1) coloring and never creates a monochromatic clique
/// that was not already present.
inline SetColoring delete_color(const SetColoring& c, int dropped) {
    if (c.colors_per_edge < 2)
        throw std::invalid_argument("delete_color: requires s >= 2");
    if (dropped < 0 || dropped >= c.num_colors)
        throw std::invalid_argument("delete_color: color out of range");
    SetColoring out = c;
    out.num_colors = c.num_colors - 1;
    out.colors_per_edge = c.colors_per_edge - 1;
    for (ColorSet& cs : out.edge_colors) {
        ColorSet shrunk = cs;
        if (shrunk.test(dropped))
            shrunk.reset(dropped);
        else
            shrunk.reset(shrunk.highest());
        ColorSet reindexed;
        shrunk.for_each([&](int color) { reindexed.set(color < dropped ? color : color - 1); });
        cs = reindexed;
    }
    return out;
}

} // namespace setramsey
