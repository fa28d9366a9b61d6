#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

namespace detail {

// Iterated color refinement: a vertex's new color is (old color, sorted
// multiset of neighbor colors), renumbered by order of first appearance of
// the sorted signature. Stable under isomorphism.
inline void refine_colors(const SimpleGraph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.neighbors(v).size() + 1);
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (int w : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> renum;
        for (const auto& [s, v] : sig) renum.emplace(s, 0);
        int next = 0;
        for (auto& [s, c] : renum) c = next++;
        bool changed = false;
        for (const auto& [s, v] : sig) {
            int c = renum[s];
            if (c != color[static_cast<std::size_t>(v)]) changed = true;
            color[static_cast<std::size_t>(v)] = c;
        }
        if (!changed || next == n) return;
    }
}

// Adjacency bits of g relabeled by perm (perm[i] = original vertex at canonical
// position i), upper triangle, packed.
inline std::string relabeled_key(const SimpleGraph& g, const std::vector<int>& perm,
                                 const std::vector<int>& input_color) {
    const int n = g.vertex_count();
    std::string key;
    key.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * n / 16 + 2);
    key.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
        key.push_back(static_cast<char>(input_color[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) |
                  (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0);
            if (++nbits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) key.push_back(static_cast<char>(acc << (8 - nbits)));
    return key;
}

inline void canon_search(const SimpleGraph& g, std::vector<int> color,
                         const std::vector<int>& input_color, std::string& best) {
    refine_colors(g, color);
    const int n = g.vertex_count();
    // first non-singleton color class, by color value (isomorphism-invariant)
    int target_color = -1;
    for (int c = 0;; ++c) {
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (color[static_cast<std::size_t>(v)] == c) ++count;
        if (count == 0) break;
        if (count > 1) {
            target_color = c;
            break;
        }
    }
    if (target_color == -1) {
        // discrete: colors are a permutation
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
        std::string key = relabeled_key(g, perm, input_color);
        if (best.empty() || key < best) best = std::move(key);
        return;
    }
    // individualize every vertex of the target cell (exactness over speed)
    for (int v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)] != target_color) continue;
        std::vector<int> next(color);
        for (int u = 0; u < n; ++u)
            if (next[static_cast<std::size_t>(u)] > target_color) ++next[static_cast<std::size_t>(u)];
        next[static_cast<std::size_t>(v)] = target_color + 1;
        canon_search(g, std::move(next), input_color, best);
    }
}

} // namespace detail

inline constexpr int canonical_default_limit = 24;

/// Canonical certificate: equal strings iff the graphs are isomorphic (as
/// vertex-colored graphs when colors are given). Exact; intended for small n.
inline std::string canonical_form(const SimpleGraph& g, const std::vector<int>& colors = {},
                                  int max_n = canonical_default_limit) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw capacity_error("canonical_form: " + std::to_string(n) + " vertices exceeds limit " +
                             std::to_string(max_n));
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    if (!colors.empty()) {
        if (static_cast<int>(colors.size()) != n)
            throw input_error("canonical_form: color vector size mismatch");
        color = colors;
    }
    std::string best;
    const std::vector<int>& input_color = colors.empty() ? color : colors;
    detail::canon_search(g, color, input_color, best);
    return best;
}

inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                          int max_n = canonical_default_limit) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, {}, max_n) == canonical_form(b, {}, max_n);
}

} // namespace specgraph
