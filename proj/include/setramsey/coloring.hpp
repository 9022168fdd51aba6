#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "setramsey/color_set.hpp"
#include "setramsey/errors.hpp"
#include "setramsey/subsets.hpp"

namespace setramsey {

inline constexpr int kFormatVersion = 1;
inline constexpr std::uint64_t kDefaultEdgeLimit = 4'000'000;

/// A set-coloring of the complete k-uniform hypergraph on N vertices:
/// every k-subset of vertices carries a subset of the palette {0..r-1}.
/// When `slack` is false each edge carries exactly s colors, otherwise
/// at least s. Storage is a dense array indexed by the colexicographic
/// rank of the edge, so lookups are O(1).
struct SetColoring {
    int uniformity = 2;    // k
    int num_vertices = 0;  // N
    int num_colors = 1;    // r
    int colors_per_edge = 1; // s
    bool slack = false;
    std::vector<ColorSet> edge_colors; // colex-indexed, size C(N, k)

    std::uint64_t edge_count() const {
        return binomial_u64(static_cast<std::uint64_t>(num_vertices),
                            static_cast<std::uint64_t>(uniformity));
    }

    const ColorSet& colors_at(std::uint64_t rank) const { return edge_colors[rank]; }
    ColorSet& colors_at(std::uint64_t rank) { return edge_colors[rank]; }

    const ColorSet& colors_of(std::span<const int> edge) const {
        return edge_colors[colex_rank(edge)];
    }

    /// k = 2 fast path.
    const ColorSet& colors_of_pair(int u, int v) const {
        return edge_colors[u < v ? pair_rank(u, v) : pair_rank(v, u)];
    }

    bool operator==(const SetColoring&) const = default;
};

inline void check_coloring_dimensions(int k, int N, int r, int s,
                                      std::uint64_t edge_limit = kDefaultEdgeLimit) {
    if (k < 2) throw std::invalid_argument("set coloring: uniformity must be >= 2");
    if (N < k) throw std::invalid_argument("set coloring: need at least k vertices");
    if (r < 1 || s < 1 || s > r) throw std::invalid_argument("set coloring: need 1 <= s <= r");
    if (r > ColorSet::kCapacity)
        throw ResourceLimitError("set coloring: palette capped at " +
                                 std::to_string(ColorSet::kCapacity) + " colors");
    const std::uint64_t edges =
        binomial_u64(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(k));
    if (edges > edge_limit)
        throw ResourceLimitError("set coloring: C(N,k) = " + std::to_string(edges) +
                                 " exceeds the edge limit of " + std::to_string(edge_limit));
}

/// Builds a coloring by evaluating `fn` on every edge in colex order.
template <typename Fn>
SetColoring build_coloring(int k, int N, int r, int s, bool slack, Fn&& fn,
                           std::uint64_t edge_limit = kDefaultEdgeLimit) {
    check_coloring_dimensions(k, N, r, s, edge_limit);
    SetColoring c;
    c.uniformity = k;
    c.num_vertices = N;
    c.num_colors = r;
    c.colors_per_edge = s;
    c.slack = slack;
    c.edge_colors.reserve(c.edge_count());
    for_each_k_subset(N, k, [&](std::span<const int> edge) {
        c.edge_colors.push_back(fn(edge));
    });
    return c;
}

struct Violation {
    std::uint64_t edge_rank = 0;
    std::vector<int> vertices;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Checks the SetColoring invariants: a complete edge map, color sets of
/// the right size, and all colors inside the palette. Violations are
/// returned as data, not thrown.
inline ValidationReport validate(const SetColoring& c) {
    ValidationReport report;
    auto flag_header = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back({0, {}, msg});
    };
    if (c.uniformity < 2) flag_header("uniformity must be >= 2");
    if (c.num_vertices < c.uniformity) flag_header("need at least k vertices");
    if (c.num_colors < 1 || c.colors_per_edge < 1 || c.colors_per_edge > c.num_colors)
        flag_header("need 1 <= s <= r");
    if (c.num_colors > ColorSet::kCapacity) flag_header("palette exceeds 128 colors");
    if (!report.ok) return report;

    if (c.edge_colors.size() != c.edge_count()) {
        flag_header("edge map has " + std::to_string(c.edge_colors.size()) +
                    " entries, expected " + std::to_string(c.edge_count()));
        return report;
    }

    const ColorSet palette = ColorSet::range(0, c.num_colors);
    std::uint64_t rank = 0;
    for_each_k_subset(c.num_vertices, c.uniformity, [&](std::span<const int> edge) {
        const ColorSet& cs = c.edge_colors[rank];
        if (!cs.is_subset_of(palette)) {
            report.ok = false;
            report.violations.push_back(
                {rank, {edge.begin(), edge.end()}, "color outside palette"});
        }
        const int sz = cs.count();
        if (c.slack ? sz < c.colors_per_edge : sz != c.colors_per_edge) {
            report.ok = false;
            report.violations.push_back(
                {rank,
                 {edge.begin(), edge.end()},
                 "edge has " + std::to_string(sz) + " colors, expected " +
                     (c.slack ? ">= " : "") + std::to_string(c.colors_per_edge)});
        }
        ++rank;
    });
    return report;
}

/// Induced sub-coloring on vertices {0..M-1}.
inline SetColoring restrict_to_first(const SetColoring& c, int M) {
    if (M < c.uniformity || M > c.num_vertices)
        throw std::invalid_argument("restrict_to_first: need k <= M <= N");
    return build_coloring(c.uniformity, M, c.num_colors, c.colors_per_edge, c.slack,
                          [&](std::span<const int> edge) { return c.colors_of(edge); });
}

// ---------------------------------------------------------------------------
// Canonical file format: line-oriented JSON. The first line is the header
// {"format_version":1,"k":..,"N":..,"r":..,"s":..,"slack":..}, then one line
// {"v":[...sorted vertices...],"c":[...sorted colors...]} per edge in
// colexicographic edge order. The writer's output is byte-reproducible.
// ---------------------------------------------------------------------------

inline void write_coloring(std::ostream& out, const SetColoring& c) {
    out << "{\"format_version\":" << kFormatVersion << ",\"k\":" << c.uniformity
        << ",\"N\":" << c.num_vertices << ",\"r\":" << c.num_colors
        << ",\"s\":" << c.colors_per_edge << ",\"slack\":" << (c.slack ? "true" : "false")
        << "}\n";
    std::uint64_t rank = 0;
    for_each_k_subset(c.num_vertices, c.uniformity, [&](std::span<const int> edge) {
        out << "{\"v\":[";
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i != 0) out << ',';
            out << edge[i];
        }
        out << "],\"c\":[";
        bool first = true;
        c.edge_colors[rank].for_each([&](int color) {
            if (!first) out << ',';
            first = false;
            out << color;
        });
        out << "]}\n";
        ++rank;
    });
}

inline std::string coloring_to_string(const SetColoring& c) {
    std::ostringstream os;
    write_coloring(os, c);
    return os.str();
}

/// Parses and fully validates the canonical format; rejects any file whose
/// content violates the SetColoring invariants or the prescribed edge order.
inline SetColoring read_coloring(std::istream& in) {
    using nlohmann::json;
    std::string line;
    if (!std::getline(in, line)) throw FileFormatError("coloring file: missing header line");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("coloring file: bad header: ") + e.what());
    }
    for (const char* key : {"format_version", "k", "N", "r", "s", "slack"})
        if (!header.contains(key))
            throw FileFormatError(std::string("coloring file: header missing \"") + key + "\"");
    if (header["format_version"].get<int>() != kFormatVersion)
        throw FileFormatError("coloring file: unsupported format_version");

    SetColoring c;
    c.uniformity = header["k"].get<int>();
    c.num_vertices = header["N"].get<int>();
    c.num_colors = header["r"].get<int>();
    c.colors_per_edge = header["s"].get<int>();
    c.slack = header["slack"].get<bool>();
    try {
        check_coloring_dimensions(c.uniformity, c.num_vertices, c.num_colors, c.colors_per_edge);
    } catch (const std::exception& e) {
        throw FileFormatError(std::string("coloring file: ") + e.what());
    }

    const std::uint64_t expected_edges = c.edge_count();
    c.edge_colors.reserve(expected_edges);
    std::vector<int> expected = first_k_subset(c.uniformity);
    std::uint64_t line_no = 1;
    bool more_edges = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!more_edges) throw FileFormatError("coloring file: trailing data after last edge");
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            throw FileFormatError("coloring file line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!rec.contains("v") || !rec.contains("c"))
            throw FileFormatError("coloring file line " + std::to_string(line_no) +
                                  ": edge record needs \"v\" and \"c\"");
        const auto verts = rec["v"].get<std::vector<int>>();
        if (verts != expected)
            throw FileFormatError("coloring file line " + std::to_string(line_no) +
                                  ": edges must appear in colexicographic order");
        ColorSet cs;
        int prev = -1;
        for (int color : rec["c"].get<std::vector<int>>()) {
            if (color <= prev)
                throw FileFormatError("coloring file line " + std::to_string(line_no) +
                                      ": colors must be sorted and distinct");
            if (color < 0 || color >= c.num_colors)
                throw FileFormatError("coloring file line " + std::to_string(line_no) +
                                      ": color outside palette");
            cs.set(color);
            prev = color;
        }
        c.edge_colors.push_back(cs);
        more_edges = next_k_subset(expected, c.num_vertices);
    }
    if (c.edge_colors.size() != expected_edges)
        throw FileFormatError("coloring file: has " + std::to_string(c.edge_colors.size()) +
                              " edges, expected " + std::to_string(expected_edges));
    const ValidationReport report = validate(c);
    if (!report.ok)
        throw FileFormatError("coloring file: invariant violation: " +
                              report.violations.front().message);
    return c;
}

inline SetColoring coloring_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_coloring(is);
}

} // namespace setramsey
