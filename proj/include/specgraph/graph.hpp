#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so adjacency tests are O(log deg) and the
/// representation stays small even for the ~10^5-vertex construction outputs.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(check_count(n))) {}

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const noexcept {
        std::size_t total = 0;
        for (const auto& row : adj_) total += row.size();
        return total / 2;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& row = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Inserts an edge, keeping neighbor lists sorted. Duplicates collapse.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ")");
        insert_arc(u, v);
        insert_arc(v, u);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const SimpleGraph& other) const = default;

private:
    static int check_count(int n) {
        if (n < 0) throw input_error("negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(vertex_count()) + ")");
    }
    void insert_arc(int u, int v) {
        auto& row = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(row.begin(), row.end(), v);
        if (it == row.end() || *it != v) row.insert(it, v);
    }

    std::vector<std::vector<int>> adj_;
};

inline SimpleGraph make_graph(int n, std::span<const std::pair<int, int>> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline SimpleGraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return make_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

// ---- standard families -------------------------------------------------
//
// Vertex numbering conventions:
//   cycle/path: vertices in walk order.
//   complete_bipartite(a,b): side A = 0..a-1, side B = a..a+b-1.
//   cocktail_party(m): parts {2i, 2i+1}, i = 0..m-1.
//   claw: center 0.  diamond: missing edge is (2,3).  paw: triangle {0,1,2}, pendant 3 at 0.

inline SimpleGraph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle needs n >= 3");
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline SimpleGraph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw input_error("complete_bipartite needs non-negative sides");
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline SimpleGraph cocktail_party_graph(int m) {
    if (m < 1) throw input_error("cocktail_party needs m >= 1");
    SimpleGraph g(2 * m);
    for (int i = 0; i < 2 * m; ++i)
        for (int j = i + 1; j < 2 * m; ++j)
            if (i / 2 != j / 2) g.add_edge(i, j);
    return g;
}

inline SimpleGraph claw_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline SimpleGraph diamond_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline SimpleGraph paw_graph() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

inline SimpleGraph standard_graph(const std::string& kind, std::span<const int> params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw input_error("family '" + kind + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "cycle") { need(1); return cycle_graph(params[0]); }
    if (kind == "path") { need(1); return path_graph(params[0]); }
    if (kind == "complete") { need(1); return complete_graph(params[0]); }
    if (kind == "complete_bipartite") { need(2); return complete_bipartite_graph(params[0], params[1]); }
    if (kind == "cocktail") { need(1); return cocktail_party_graph(params[0]); }
    if (kind == "claw") { need(0); return claw_graph(); }
    if (kind == "diamond") { need(0); return diamond_graph(); }
    if (kind == "paw") { need(0); return paw_graph(); }
    throw input_error("unknown graph family '" + kind + "'");
}

inline SimpleGraph standard_graph(const std::string& kind, std::initializer_list<int> params) {
    return standard_graph(kind, std::span<const int>(params.begin(), params.size()));
}

// ---- basic operations ----------------------------------------------------

/// Vertex set is the pair product; (u1,v1)~(u2,v2) iff equal in one coordinate
/// and adjacent in the other. Vertex (u,v) gets index u*|H| + v.
inline SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw input_error("cartesian_product needs non-empty factors");
    const int nh = h.vertex_count();
    SimpleGraph out(g.vertex_count() * nh);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < nh; ++v) {
            for (int w : h.neighbors(v))
                if (w > v) out.add_edge(u * nh + v, u * nh + w);
            for (int x : g.neighbors(u))
                if (x > u) out.add_edge(u * nh + v, x * nh + v);
        }
    return out;
}

/// Induced subgraph on S, relabeled densely in S's order.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> s) {
    SimpleGraph out(static_cast<int>(s.size()));
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= g.vertex_count()) throw input_error("induced_subgraph: vertex out of range");
        if (pos[static_cast<std::size_t>(v)] != -1) throw input_error("induced_subgraph: repeated vertex");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int w : g.neighbors(s[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
        }
    return out;
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::initializer_list<int> s) {
    return induced_subgraph(g, std::span<const int>(s.begin(), s.size()));
}

inline std::vector<int> degrees(const SimpleGraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

/// Returns k iff all degrees equal k. Empty graph is 0-regular by convention.
inline std::optional<int> is_regular(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

/// Empty graph counts as connected.
inline bool is_connected(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

inline std::vector<int> connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = c;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

inline bool is_triangle_free(const SimpleGraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return false;
                (a[i] < b[j]) ? ++i : ++j;
            }
        }
    return true;
}

// ---- pattern detection -----------------------------------------------------

enum class PatternKind { three_claw, diamond, triangle };

/// One induced occurrence, or nullopt. THREE_CLAW is returned center first;
/// DIAMOND as (a, b, c, d) with (a,b) the edge of degree-3 vertices.
inline std::optional<std::vector<int>> find_induced(const SimpleGraph& g, PatternKind kind) {
    const int n = g.vertex_count();
    switch (kind) {
    case PatternKind::triangle:
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                for (int w : g.neighbors(v))
                    if (w > v && g.adjacent(u, w)) return std::vector<int>{u, v, w};
            }
        return std::nullopt;
    case PatternKind::three_claw:
        for (int c = 0; c < n; ++c) {
            const auto& nb = g.neighbors(c);
            const int d = static_cast<int>(nb.size());
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    if (g.adjacent(nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(j)])) continue;
                    for (int k = j + 1; k < d; ++k) {
                        int a = nb[static_cast<std::size_t>(i)], b = nb[static_cast<std::size_t>(j)],
                            e = nb[static_cast<std::size_t>(k)];
                        if (!g.adjacent(a, e) && !g.adjacent(b, e))
                            return std::vector<int>{c, a, b, e};
                    }
                }
        }
        return std::nullopt;
    case PatternKind::diamond:
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                // common neighbors of the edge (u,v); any non-adjacent pair completes a diamond
                std::vector<int> common;
                for (int w : g.neighbors(u))
                    if (w != v && g.adjacent(v, w)) common.push_back(w);
                for (std::size_t i = 0; i < common.size(); ++i)
                    for (std::size_t j = i + 1; j < common.size(); ++j)
                        if (!g.adjacent(common[i], common[j]))
                            return std::vector<int>{u, v, common[i], common[j]};
            }
        return std::nullopt;
    }
    return std::nullopt;
}

/// Returns m iff G is the complete multipartite graph with m parts of size 2.
inline std::optional<int> is_cocktail_party(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    const int m = n / 2;
    if (is_regular(g) != std::optional<int>(n - 2)) return std::nullopt;
    // each vertex has a unique non-neighbor; pairing must be an involution
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        std::size_t idx = 0;
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            if (idx < nb.size() && nb[idx] == w) { ++idx; continue; }
            if (mate[static_cast<std::size_t>(v)] != -1) return std::nullopt;
            mate[static_cast<std::size_t>(v)] = w;
        }
        if (mate[static_cast<std::size_t>(v)] == -1) return std::nullopt;
    }
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])] != v) return std::nullopt;
    return m;
}

} // namespace specgraph
