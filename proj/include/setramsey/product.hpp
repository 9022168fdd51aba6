#pragma once

#include <stdexcept>
#include <string>

#include "setramsey/codes.hpp"
#include "setramsey/coloring.hpp"

namespace setramsey {

/// Product of a base edge coloring with a code over alphabet [base.N]:
/// vertices are codewords, and the edge (x, y) receives the color (c, i) -
/// flattened as i*a + c - for every coordinate i where x_i != y_i and every
/// base color c on the edge {x_i, y_i}. Each edge thus carries exactly
/// b * hamming_distance(x, y) >= d*b colors, and a monochromatic-K_n-free
/// base yields a monochromatic-K_n-free product.
inline SetColoring product_coloring(const SetColoring& base, const Code& code) {
    if (base.uniformity != 2)
        throw std::invalid_argument("product_coloring: base must have k = 2");
    if (base.slack)
        throw std::invalid_argument("product_coloring: base must carry exactly b colors per edge");
    if (code.alphabet_size != base.num_vertices)
        throw std::invalid_argument("product_coloring: code alphabet must equal base vertex count");
    if (code.words.size() < 2)
        throw std::invalid_argument("product_coloring: need at least 2 codewords");

    const int a = base.num_colors;
    const int b = base.colors_per_edge;
    const int m = code.length;
    const int r = m * a;
    const int s = code.claimed_distance * b;
    if (r > ColorSet::kCapacity)
        throw ResourceLimitError("product_coloring: m*a = " + std::to_string(r) +
                                 " exceeds the 128-color palette cap");

    const int N = static_cast<int>(code.words.size());
    return build_coloring(2, N, r, s, true, [&](std::span<const int> edge) {
        const Word& x = code.words[static_cast<std::size_t>(edge[0])];
        const Word& y = code.words[static_cast<std::size_t>(edge[1])];
        ColorSet cs;
        for (int i = 0; i < m; ++i) {
            const int xi = x[static_cast<std::size_t>(i)];
            const int yi = y[static_cast<std::size_t>(i)];
            if (xi == yi) continue;
            base.colors_of_pair(xi, yi).for_each([&](int c) { cs.set(i * a + c); });
        }
        return cs;
    });
}

} // namespace setramsey
