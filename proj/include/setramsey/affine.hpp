#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setramsey/bigint.hpp"
#include "setramsey/code_bridge.hpp"
#include "setramsey/coloring.hpp"
#include "setramsey/gf.hpp"

namespace setramsey {

/// Number of k-dimensional subspaces of F_q^d, computed exactly as
/// the product of (q^(d-i) - 1) / (q^(k-i) - 1) over i = 0..k-1.
inline BigInt gaussian_binomial(int d, int k, int q) {
    if (k < 0 || d < 0) throw std::invalid_argument("gaussian_binomial: need d, k >= 0");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: need q >= 2");
    if (k > d) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= big_pow(q, static_cast<std::uint64_t>(d - i)) - 1;
        den *= big_pow(q, static_cast<std::uint64_t>(k - i)) - 1;
    }
    if (num % den != 0)
        throw std::logic_error("gaussian_binomial: product is not integral");
    return num / den;
}

/// Parameters of the affine-partition construction over F_q^d with
/// k-dimensional subspaces. All derived quantities are exact:
///   N = q^d, n = q^(d-k) + 1, r = C(d,k)_q,
///   s = r - C(d-1,k-1)_q = (1 - (q^k-1)/(q^d-1)) * r.
struct AffineParams {
    int q = 2;
    int d = 2;
    int k = 1;
    int num_vertices = 0;   // N
    int clique_bound = 0;   // n
    int num_colors = 0;     // r
    int colors_per_edge = 0; // s

    static AffineParams make(int q, int d, int k) {
        if (!(0 < k && k < d)) throw std::invalid_argument("affine params: need 0 < k < d");
        if (q < 2 || q > kMaxFieldOrder || prime_base(q) == 0)
            throw std::invalid_argument("affine params: q must be a prime power <= " +
                                        std::to_string(kMaxFieldOrder));
        AffineParams p;
        p.q = q;
        p.d = d;
        p.k = k;
        const BigInt big_n_vertices = big_pow(q, static_cast<std::uint64_t>(d));
        if (big_n_vertices > 1'000'000)
            throw ResourceLimitError("affine params: q^d too large to materialize");
        p.num_vertices = static_cast<int>(big_n_vertices);
        p.clique_bound = static_cast<int>(big_pow(q, static_cast<std::uint64_t>(d - k))) + 1;
        const BigInt r = gaussian_binomial(d, k, q);
        const BigInt on_point = gaussian_binomial(d - 1, k - 1, q); // subspaces through a fixed nonzero vector
        if (r > 1'000'000) throw ResourceLimitError("affine params: too many subspaces");
        p.num_colors = static_cast<int>(r);
        p.colors_per_edge = static_cast<int>(r - on_point);
        return p;
    }
};

/// All k-dimensional subspaces of F_q^d, each returned as the sorted list of
/// its q^k point indices (a point (c_0..c_{d-1}) is encoded as sum c_i q^i).
/// Enumeration is by reduced row echelon form, so each subspace appears once.
inline std::vector<std::vector<int>> enumerate_subspaces(const GaloisField& field, int d, int k) {
    const int q = field.order();
    std::vector<std::vector<int>> subspaces;

    std::vector<int> pivots = first_k_subset(k);
    do {
        // free positions: entries right of each pivot that are not pivots themselves
        std::vector<std::pair<int, int>> free_slots; // (row, column)
        for (int row = 0; row < k; ++row)
            for (int col = pivots[static_cast<std::size_t>(row)] + 1; col < d; ++col)
                if (!std::binary_search(pivots.begin(), pivots.end(), col))
                    free_slots.emplace_back(row, col);

        std::vector<std::vector<int>> basis(static_cast<std::size_t>(k),
                                            std::vector<int>(static_cast<std::size_t>(d), 0));
        for (int row = 0; row < k; ++row)
            basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(
                pivots[static_cast<std::size_t>(row)])] = 1;

        std::vector<int> values(free_slots.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_slots.size(); ++i)
                basis[static_cast<std::size_t>(free_slots[i].first)]
                     [static_cast<std::size_t>(free_slots[i].second)] = values[i];

            // span: all q^k combinations of the basis rows
            std::vector<int> points;
            std::vector<int> coeff(static_cast<std::size_t>(k), 0);
            while (true) {
                std::vector<int> vec(static_cast<std::size_t>(d), 0);
                for (int row = 0; row < k; ++row) {
                    const int c = coeff[static_cast<std::size_t>(row)];
                    if (c == 0) continue;
                    for (int col = 0; col < d; ++col)
                        vec[static_cast<std::size_t>(col)] = field.add(
                            vec[static_cast<std::size_t>(col)],
                            field.mul(c, basis[static_cast<std::size_t>(row)]
                                             [static_cast<std::size_t>(col)]));
                }
                int index = 0;
                for (int col = d - 1; col >= 0; --col)
                    index = index * q + vec[static_cast<std::size_t>(col)];
                points.push_back(index);
                int pos = 0;
                while (pos < k && coeff[static_cast<std::size_t>(pos)] == q - 1)
                    coeff[static_cast<std::size_t>(pos)++] = 0;
                if (pos == k) break;
                ++coeff[static_cast<std::size_t>(pos)];
            }
            std::sort(points.begin(), points.end());
            subspaces.push_back(std::move(points));

            std::size_t pos = 0;
            while (pos < values.size() && values[pos] == q - 1) values[pos++] = 0;
            if (pos == values.size()) break;
            ++values[pos];
        }
    } while (next_k_subset(pivots, d));

    std::sort(subspaces.begin(), subspaces.end());
    return subspaces;
}

/// One partition of F_q^d per k-dimensional subspace S: x and y share a part
/// iff y - x lies in S, i.e. the parts are the q^(d-k) cosets of S. Part
/// labels follow first appearance in vertex order.
inline PartitionFamily affine_partition_family(const AffineParams& params) {
    const GaloisField field(params.q);
    const int d = params.d, q = params.q, N = params.num_vertices;
    const auto subspaces = enumerate_subspaces(field, d, params.k);
    if (static_cast<int>(subspaces.size()) != params.num_colors)
        throw std::logic_error("affine_partition_family: subspace count mismatch");

    // vertex -> coordinate digits, once
    std::vector<std::vector<int>> coords(static_cast<std::size_t>(N),
                                         std::vector<int>(static_cast<std::size_t>(d)));
    for (int v = 0; v < N; ++v) {
        int x = v;
        for (int i = 0; i < d; ++i) {
            coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = x % q;
            x /= q;
        }
    }

    PartitionFamily pf;
    pf.num_vertices = N;
    pf.num_partitions = params.num_colors;
    pf.parts_per_partition = static_cast<int>(big_pow(q, static_cast<std::uint64_t>(d - params.k)));
    pf.assignment.reserve(subspaces.size());
    for (const auto& subspace : subspaces) {
        std::vector<int> labels(static_cast<std::size_t>(N), -1);
        int next_label = 0;
        for (int v = 0; v < N; ++v) {
            if (labels[static_cast<std::size_t>(v)] != -1) continue;
            // the coset v + S gets the next label
            for (int s_point : subspace) {
                std::vector<int> sum(static_cast<std::size_t>(d));
                int x = s_point;
                for (int i = 0; i < d; ++i) {
                    sum[static_cast<std::size_t>(i)] = field.add(
                        coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)], x % q);
                    x /= q;
                }
                int index = 0;
                for (int i = d - 1; i >= 0; --i) index = index * q + sum[static_cast<std::size_t>(i)];
                labels[static_cast<std::size_t>(index)] = next_label;
            }
            ++next_label;
        }
        if (next_label != pf.parts_per_partition)
            throw std::logic_error("affine_partition_family: unexpected part count");
        pf.assignment.push_back(std::move(labels));
    }
    return pf;
}

/// Edge (u,v) receives the colors of the partitions separating u and v.
/// The result has s = (minimum separation count) and is flagged slack unless
/// every pair is separated the same number of times. Each color class is
/// complete multipartite, hence contains no clique on parts+1 vertices.
inline SetColoring partitions_to_coloring(const PartitionFamily& pf) {
    check_partition_family(pf);
    const int N = pf.num_vertices;
    if (N < 2) throw std::invalid_argument("partitions_to_coloring: need at least 2 vertices");
    int min_sep = pf.num_partitions + 1, max_sep = -1;
    std::vector<ColorSet> sets;
    sets.reserve(binomial_u64(static_cast<std::uint64_t>(N), 2));
    for (int v = 1; v < N; ++v)
        for (int u = 0; u < v; ++u) {
            ColorSet cs;
            for (int i = 0; i < pf.num_partitions; ++i)
                if (pf.assignment[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] !=
                    pf.assignment[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])
                    cs.set(i);
            min_sep = std::min(min_sep, cs.count());
            max_sep = std::max(max_sep, cs.count());
            sets.push_back(cs);
        }
    if (min_sep == 0)
        throw std::invalid_argument(
            "partitions_to_coloring: some pair is separated by no partition");
    SetColoring c;
    c.uniformity = 2;
    c.num_vertices = N;
    c.num_colors = pf.num_partitions;
    c.colors_per_edge = min_sep;
    c.slack = min_sep != max_sep;
    check_coloring_dimensions(c.uniformity, c.num_vertices, c.num_colors, c.colors_per_edge);
    c.edge_colors = std::move(sets);
    return c;
}

/// The full affine construction: a coloring of K_{q^d} with C(d,k)_q colors,
/// s colors per edge, and no monochromatic clique on q^(d-k)+1 vertices.
inline SetColoring affine_coloring(const AffineParams& params) {
    SetColoring c = partitions_to_coloring(affine_partition_family(params));
    if (c.slack || c.colors_per_edge != params.colors_per_edge)
        throw std::logic_error("affine_coloring: separation counts are not uniform");
    return c;
}

/// Searches the small (q, d, k) grid for an affine family matching (n, r, s)
/// exactly with at least `min_vertices` points.
inline std::optional<AffineParams> find_affine_match(int n, int r, int s, int min_vertices) {
    for (int q = 2; q <= kMaxFieldOrder; ++q) {
        if (prime_base(q) == 0) continue;
        for (int d = 2; d <= 20; ++d) {
            BigInt vertices = big_pow(q, static_cast<std::uint64_t>(d));
            if (vertices > 1'000'000) break;
            for (int k = 1; k < d; ++k) {
                AffineParams p = AffineParams::make(q, d, k);
                if (p.clique_bound == n && p.num_colors == r && p.colors_per_edge == s &&
                    p.num_vertices >= min_vertices)
                    return p;
            }
        }
    }
    return std::nullopt;
}

} // namespace setramsey
