#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "setramsey/cliques.hpp"
#include "setramsey/codes.hpp"
#include "setramsey/coloring.hpp"

namespace setramsey {

/// One vertex partition per color: vertex v has part label assignment[i][v]
/// in partition i. The bridge between codes and colorings assigns vertex v
/// the codeword (assignment[0][v], ..., assignment[r-1][v]).
struct PartitionFamily {
    int num_vertices = 0;
    int num_partitions = 0;
    int parts_per_partition = 0;
    std::vector<std::vector<int>> assignment; // [partition][vertex] -> part label

    bool operator==(const PartitionFamily&) const = default;
};

inline void check_partition_family(const PartitionFamily& pf) {
    if (static_cast<int>(pf.assignment.size()) != pf.num_partitions)
        throw std::invalid_argument("partition family: wrong number of partitions");
    for (const auto& labels : pf.assignment) {
        if (static_cast<int>(labels.size()) != pf.num_vertices)
            throw std::invalid_argument("partition family: wrong number of vertex labels");
        for (int part : labels)
            if (part < 0 || part >= pf.parts_per_partition)
                throw std::invalid_argument("partition family: label outside range");
    }
}

/// Vertices are codewords; edge (u,v) carries color i for every coordinate i
/// where the words differ. Each edge then has exactly hamming_distance(u,v)
/// colors, so the claimed code distance becomes the slack-coloring s, and
/// every color class is complete multipartite (one part per symbol), hence
/// q-partite.
inline SetColoring code_to_coloring(const Code& code) {
    if (code.words.size() < 2)
        throw std::invalid_argument("code_to_coloring: need at least 2 codewords");
    const int N = static_cast<int>(code.words.size());
    return build_coloring(2, N, code.length, code.claimed_distance, true,
                          [&](std::span<const int> edge) {
                              const Word& x = code.words[static_cast<std::size_t>(edge[0])];
                              const Word& y = code.words[static_cast<std::size_t>(edge[1])];
                              ColorSet cs;
                              for (int i = 0; i < code.length; ++i)
                                  if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)])
                                      cs.set(i);
                              return cs;
                          });
}

namespace detail {

// Exact graph coloring with <= `parts` labels by backtracking over vertices
// in descending-degree order; new labels are introduced in ascending order,
// which removes label permutations from the search. Returns nullopt when the
// search proves no proper coloring with that many parts exists.
inline std::optional<std::vector<int>> proper_coloring(const std::vector<VertexSet>& adj,
                                                       int n, int parts,
                                                       SearchBudget& budget) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].count() > adj[static_cast<std::size_t>(b)].count();
    });

    std::vector<int> label(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int limit = std::min(parts - 1, used); // label `used` introduces a new part
        for (int part = 0; part <= limit; ++part) {
            budget.tick("partition search");
            bool ok = true;
            adj[static_cast<std::size_t>(v)].for_each([&](int w) {
                if (label[static_cast<std::size_t>(w)] == part) ok = false;
            });
            if (!ok) continue;
            label[static_cast<std::size_t>(v)] = part;
            if (self(self, idx + 1, std::max(used, part + 1))) return true;
            label[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    return label;
}

} // namespace detail

/// For every color, partitions the vertex set into at most `parts`
/// independent sets of that color class (k = 2 only). Returns nullopt when
/// the backtracking search proves some class needs more parts.
inline std::optional<PartitionFamily> partition_color_classes(
    const SetColoring& c, int parts, std::uint64_t node_budget = kDefaultNodeBudget) {
    if (c.uniformity != 2)
        throw std::invalid_argument("partition_color_classes: requires k = 2");
    if (parts < 1) throw std::invalid_argument("partition_color_classes: parts must be >= 1");
    SearchBudget budget(node_budget);
    PartitionFamily pf;
    pf.num_vertices = c.num_vertices;
    pf.num_partitions = c.num_colors;
    pf.parts_per_partition = parts;
    for (int color = 0; color < c.num_colors; ++color) {
        const auto adj = color_adjacency(c, color);
        auto labels = detail::proper_coloring(adj, c.num_vertices, parts, budget);
        if (!labels) return std::nullopt;
        pf.assignment.push_back(std::move(*labels));
    }
    return pf;
}

/// Reads off the codeword of every vertex from a family of proper partitions.
/// Any two vertices differ in the coordinates of their shared edge colors, so
/// the resulting code has pairwise distance >= s and exactly N words.
/// Throws (naming the violating pair) if some partition fails to separate an
/// edge of its color - that indicates caller error.
inline Code coloring_to_code(const SetColoring& c, const PartitionFamily& pf) {
    if (c.uniformity != 2) throw std::invalid_argument("coloring_to_code: requires k = 2");
    check_partition_family(pf);
    if (pf.num_vertices != c.num_vertices || pf.num_partitions != c.num_colors)
        throw std::invalid_argument("coloring_to_code: partition family does not match coloring");
    for (int v = 1; v < c.num_vertices; ++v)
        for (int u = 0; u < v; ++u) {
            const ColorSet& cs = c.edge_colors[pair_rank(u, v)];
            bool bad = false;
            int bad_color = -1;
            cs.for_each([&](int color) {
                if (pf.assignment[static_cast<std::size_t>(color)][static_cast<std::size_t>(u)] ==
                    pf.assignment[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)]) {
                    bad = true;
                    bad_color = color;
                }
            });
            if (bad)
                throw std::invalid_argument(
                    "coloring_to_code: partition " + std::to_string(bad_color) +
                    " does not separate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
    Code code;
    code.alphabet_size = pf.parts_per_partition;
    code.length = c.num_colors;
    code.claimed_distance = c.colors_per_edge;
    code.words.reserve(static_cast<std::size_t>(c.num_vertices));
    for (int v = 0; v < c.num_vertices; ++v) {
        Word w(static_cast<std::size_t>(c.num_colors));
        for (int i = 0; i < c.num_colors; ++i)
            w[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                pf.assignment[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
        code.words.push_back(std::move(w));
    }
    return code;
}

// ---------------------------------------------------------------------------
// PartitionFamily JSON (single line, fixed key order).
// ---------------------------------------------------------------------------

inline void write_partition_family(std::ostream& out, const PartitionFamily& pf) {
    out << "{\"num_vertices\":" << pf.num_vertices
        << ",\"num_partitions\":" << pf.num_partitions
        << ",\"parts_per_partition\":" << pf.parts_per_partition << ",\"assignment\":[";
    for (std::size_t i = 0; i < pf.assignment.size(); ++i) {
        if (i != 0) out << ',';
        out << '[';
        for (std::size_t v = 0; v < pf.assignment[i].size(); ++v) {
            if (v != 0) out << ',';
            out << pf.assignment[i][v];
        }
        out << ']';
    }
    out << "]}\n";
}

inline PartitionFamily read_partition_family(std::istream& in) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("partition file: ") + e.what());
    }
    PartitionFamily pf;
    try {
        pf.num_vertices = doc.at("num_vertices").get<int>();
        pf.num_partitions = doc.at("num_partitions").get<int>();
        pf.parts_per_partition = doc.at("parts_per_partition").get<int>();
        pf.assignment = doc.at("assignment").get<std::vector<std::vector<int>>>();
        check_partition_family(pf);
    } catch (const std::exception& e) {
        throw FileFormatError(std::string("partition file: ") + e.what());
    }
    return pf;
}

} // namespace setramsey
