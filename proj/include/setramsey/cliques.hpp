#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setramsey/coloring.hpp"
#include "setramsey/errors.hpp"
#include "setramsey/vertex_set.hpp"

namespace setramsey {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Shared node counter for backtracking searches. Throws when exhausted,
/// so a blown budget can never be mistaken for a definite answer.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

    void tick(const char* where) {
        if (++used_ > limit_)
            throw BudgetExceededError(std::string(where) + ": node budget of " +
                                      std::to_string(limit_) + " exhausted");
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// A monochromatic clique: `color` appears on every edge spanned by `vertices`.
struct CliqueWitness {
    std::vector<int> vertices; // sorted
    int color = 0;

    bool operator==(const CliqueWitness&) const = default;
};

/// Checks a witness directly against the coloring (no search involved).
inline bool witness_holds(const SetColoring& c, const CliqueWitness& w) {
    if (w.color < 0 || w.color >= c.num_colors) return false;
    if (static_cast<int>(w.vertices.size()) < c.uniformity) return false;
    if (!std::is_sorted(w.vertices.begin(), w.vertices.end())) return false;
    for (int v : w.vertices)
        if (v < 0 || v >= c.num_vertices) return false;
    bool ok = true;
    for_each_k_subset(static_cast<int>(w.vertices.size()), c.uniformity,
                      [&](std::span<const int> idx) {
                          std::vector<int> edge(idx.size());
                          for (std::size_t i = 0; i < idx.size(); ++i)
                              edge[i] = w.vertices[static_cast<std::size_t>(idx[i])];
                          if (!c.colors_of(edge).test(w.color)) ok = false;
                      });
    return ok;
}

/// Adjacency rows of a single color class (k = 2 only).
inline std::vector<VertexSet> color_adjacency(const SetColoring& c, int color) {
    const int n = c.num_vertices;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (c.edge_colors[pair_rank(u, v)].test(color)) {
                adj[static_cast<std::size_t>(u)].set(v);
                adj[static_cast<std::size_t>(v)].set(u);
            }
    return adj;
}

namespace detail {

// Depth-first search for a clique of exactly `target` vertices inside
// `cand`; candidates are tried in ascending order, so the first clique
// found is the lexicographically least one.
inline bool graph_clique_dfs(const std::vector<VertexSet>& adj, int target,
                             std::vector<int>& clique, const VertexSet& cand,
                             SearchBudget& budget) {
    if (static_cast<int>(clique.size()) == target) return true;
    const int need = target - static_cast<int>(clique.size());
    if (cand.count() < need) return false;
    for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
        budget.tick("clique search");
        clique.push_back(v);
        VertexSet next = cand.intersect(adj[static_cast<std::size_t>(v)]);
        next.keep_above(v);
        if (graph_clique_dfs(adj, target, clique, next, budget)) return true;
        clique.pop_back();
    }
    return false;
}

inline void graph_max_clique_dfs(const std::vector<VertexSet>& adj, std::vector<int>& clique,
                                 const VertexSet& cand, std::vector<int>& best, int stop_at,
                                 SearchBudget& budget) {
    if (static_cast<int>(clique.size()) > static_cast<int>(best.size())) best = clique;
    if (stop_at > 0 && static_cast<int>(best.size()) >= stop_at) return;
    if (static_cast<int>(clique.size()) + cand.count() <= static_cast<int>(best.size())) return;
    for (int v = cand.next(0); v != -1; v = cand.next(v + 1)) {
        budget.tick("max clique");
        clique.push_back(v);
        VertexSet next = cand.intersect(adj[static_cast<std::size_t>(v)]);
        next.keep_above(v);
        graph_max_clique_dfs(adj, clique, next, best, stop_at, budget);
        clique.pop_back();
        if (stop_at > 0 && static_cast<int>(best.size()) >= stop_at) return;
        if (static_cast<int>(clique.size()) + cand.count() - 1 <= static_cast<int>(best.size()))
            return; // remaining candidates cannot beat `best`
    }
}

// True iff every k-subset of `clique` + v whose edge includes v carries `color`.
// Only (k-1)-subsets of the current clique need checking.
inline bool hyper_compatible(const SetColoring& c, int color, const std::vector<int>& clique,
                             int v) {
    const int k = c.uniformity;
    if (static_cast<int>(clique.size()) < k - 1) return true;
    bool ok = true;
    for_each_k_subset(static_cast<int>(clique.size()), k - 1, [&](std::span<const int> idx) {
        if (!ok) return;
        std::vector<int> edge;
        edge.reserve(static_cast<std::size_t>(k));
        for (int i : idx) edge.push_back(clique[static_cast<std::size_t>(i)]);
        edge.push_back(v);
        std::sort(edge.begin(), edge.end());
        if (!c.colors_of(edge).test(color)) ok = false;
    });
    return ok;
}

inline bool hyper_clique_dfs(const SetColoring& c, int color, int target,
                             std::vector<int>& clique, int start, SearchBudget& budget) {
    if (static_cast<int>(clique.size()) == target) return true;
    const int need = target - static_cast<int>(clique.size());
    for (int v = start; v <= c.num_vertices - need; ++v) {
        budget.tick("hypergraph clique search");
        if (!hyper_compatible(c, color, clique, v)) continue;
        clique.push_back(v);
        if (hyper_clique_dfs(c, color, target, clique, v + 1, budget)) return true;
        clique.pop_back();
    }
    return false;
}

inline void hyper_max_clique_dfs(const SetColoring& c, int color, std::vector<int>& clique,
                                 int start, std::vector<int>& best, int stop_at,
                                 SearchBudget& budget) {
    if (clique.size() > best.size()) best = clique;
    if (stop_at > 0 && static_cast<int>(best.size()) >= stop_at) return;
    for (int v = start; v < c.num_vertices; ++v) {
        if (static_cast<int>(clique.size()) + (c.num_vertices - v) <=
            static_cast<int>(best.size()))
            return;
        budget.tick("hypergraph max clique");
        if (!hyper_compatible(c, color, clique, v)) continue;
        clique.push_back(v);
        hyper_max_clique_dfs(c, color, clique, v + 1, best, stop_at, budget);
        clique.pop_back();
        if (stop_at > 0 && static_cast<int>(best.size()) >= stop_at) return;
    }
}

} // namespace detail

/// Lexicographically least clique on `target` vertices whose edges all
/// carry `color`, restricted to `within` when given.
inline std::optional<std::vector<int>> find_color_clique(const SetColoring& c, int color,
                                                         int target, SearchBudget& budget,
                                                         const VertexSet* within = nullptr) {
    if (target < c.uniformity) throw std::invalid_argument("find_color_clique: target < k");
    std::vector<int> clique;
    if (c.uniformity == 2) {
        const auto adj = color_adjacency(c, color);
        VertexSet cand = within != nullptr ? *within : VertexSet::all(c.num_vertices);
        if (detail::graph_clique_dfs(adj, target, clique, cand, budget)) return clique;
        return std::nullopt;
    }
    if (within != nullptr) throw std::invalid_argument("find_color_clique: subsets need k = 2");
    if (detail::hyper_clique_dfs(c, color, target, clique, 0, budget)) return clique;
    return std::nullopt;
}

/// Size of the largest vertex set all of whose edges contain `color`.
/// Any k-1 vertices span no edge, so the result is at least min(N, k-1).
inline int clique_number_of_color(const SetColoring& c, int color,
                                  std::uint64_t node_budget = kDefaultNodeBudget,
                                  const VertexSet* within = nullptr) {
    if (color < 0 || color >= c.num_colors)
        throw std::invalid_argument("clique_number_of_color: color out of range");
    SearchBudget budget(node_budget);
    std::vector<int> clique;
    std::vector<int> best;
    if (c.uniformity == 2) {
        const auto adj = color_adjacency(c, color);
        VertexSet cand = within != nullptr ? *within : VertexSet::all(c.num_vertices);
        detail::graph_max_clique_dfs(adj, clique, cand, best, 0, budget);
        const int base = std::min(c.num_vertices, 1);
        return std::max<int>(static_cast<int>(best.size()), base);
    }
    if (within != nullptr)
        throw std::invalid_argument("clique_number_of_color: subsets need k = 2");
    detail::hyper_max_clique_dfs(c, color, clique, 0, best, 0, budget);
    const int base = std::min(c.num_vertices, c.uniformity - 1);
    return std::max<int>(static_cast<int>(best.size()), base);
}

/// Exhaustive search for a monochromatic n-clique. Every color class is
/// searched (densest first); the lexicographically least witness by
/// (vertices, color) is reported, so the answer does not depend on
/// evaluation order. Returns nullopt iff no witness exists.
inline std::optional<CliqueWitness> find_mono_clique(const SetColoring& c, int n,
                                                     std::uint64_t node_budget = kDefaultNodeBudget) {
    if (n < c.uniformity) throw std::invalid_argument("find_mono_clique: n must be >= k");
    if (n > c.num_vertices) return std::nullopt;

    // densest color classes first, to surface witnesses early
    std::vector<std::pair<std::uint64_t, int>> order;
    order.reserve(static_cast<std::size_t>(c.num_colors));
    for (int color = 0; color < c.num_colors; ++color) {
        std::uint64_t size = 0;
        for (const ColorSet& cs : c.edge_colors) size += cs.test(color) ? 1 : 0;
        order.emplace_back(size, color);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    SearchBudget budget(node_budget);
    std::optional<CliqueWitness> best;
    for (const auto& [size, color] : order) {
        if (size <
            binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c.uniformity)))
            continue; // class too small to span an n-clique
        auto clique = find_color_clique(c, color, n, budget);
        if (!clique) continue;
        CliqueWitness w{std::move(*clique), color};
        if (!best || std::lexicographical_compare(w.vertices.begin(), w.vertices.end(),
                                                  best->vertices.begin(), best->vertices.end()) ||
            (w.vertices == best->vertices && w.color < best->color))
            best = std::move(w);
    }
    return best;
}

} // namespace setramsey
