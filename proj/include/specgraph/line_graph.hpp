#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

/// Edge-clique partition witnessing line-graph structure: every edge lies in
/// exactly one clique and every vertex in at most two cliques (two cliques
/// then automatically share at most one vertex).
struct KrauszPartition {
    std::vector<std::vector<int>> cliques;
};

inline constexpr int krausz_default_limit = 64;

namespace detail {

struct KrauszState {
    const SimpleGraph* g;
    std::vector<std::pair<int, int>> edges;          // processing order
    std::vector<int> edge_clique;                    // -1 = unassigned
    std::vector<std::vector<int>> clique_vertices;   // by clique id
    std::vector<int> vertex_clique_count;
    std::vector<std::vector<int>> edge_ids;          // vertex -> incident edge ids

    int edge_id(int u, int v) const {
        for (int e : edge_ids[static_cast<std::size_t>(u)]) {
            const auto& [a, b] = edges[static_cast<std::size_t>(e)];
            if ((a == u && b == v) || (a == v && b == u)) return e;
        }
        return -1;
    }

    // Joining w to clique c assigns every edge from w into c's members.
    // All-or-nothing: returns false with no side effects if w does not fit.
    bool assign_vertex_to_clique(int w, int c, std::vector<int>& touched) {
        const auto& members = clique_vertices[static_cast<std::size_t>(c)];
        for (int m : members) {
            if (!g->adjacent(w, m)) return false;
            int e = edge_id(w, m);
            if (edge_clique[static_cast<std::size_t>(e)] != -1) return false;
        }
        for (int m : members) touched.push_back(edge_id(w, m));
        for (int e : touched) edge_clique[static_cast<std::size_t>(e)] = c;
        clique_vertices[static_cast<std::size_t>(c)].push_back(w);
        ++vertex_clique_count[static_cast<std::size_t>(w)];
        return true;
    }

    void undo_vertex(int w, int c, const std::vector<int>& touched) {
        for (int e : touched) edge_clique[static_cast<std::size_t>(e)] = -1;
        clique_vertices[static_cast<std::size_t>(c)].pop_back();
        --vertex_clique_count[static_cast<std::size_t>(w)];
    }

    bool solve(std::size_t from) {
        while (from < edges.size() && edge_clique[from] != -1) ++from;
        if (from == edges.size()) return true;
        auto [u, v] = edges[from];
        // extend an existing clique through either endpoint
        for (int side = 0; side < 2; ++side) {
            int in = side == 0 ? u : v;
            int out = side == 0 ? v : u;
            if (vertex_clique_count[static_cast<std::size_t>(out)] >= 2) continue;
            for (int c = 0; c < static_cast<int>(clique_vertices.size()); ++c) {
                const auto& cv = clique_vertices[static_cast<std::size_t>(c)];
                if (std::find(cv.begin(), cv.end(), in) == cv.end()) continue;
                std::vector<int> touched;
                if (assign_vertex_to_clique(out, c, touched)) {
                    if (solve(from)) return true;
                    undo_vertex(out, c, touched);
                }
            }
        }
        // both endpoints joining a clique that so far contains neither
        if (vertex_clique_count[static_cast<std::size_t>(u)] < 2 &&
            vertex_clique_count[static_cast<std::size_t>(v)] < 2) {
            for (int c = 0; c < static_cast<int>(clique_vertices.size()); ++c) {
                const auto& cv = clique_vertices[static_cast<std::size_t>(c)];
                if (std::find(cv.begin(), cv.end(), u) != cv.end() ||
                    std::find(cv.begin(), cv.end(), v) != cv.end())
                    continue;
                std::vector<int> tu;
                if (assign_vertex_to_clique(u, c, tu)) {
                    std::vector<int> tv;
                    if (assign_vertex_to_clique(v, c, tv)) {
                        if (solve(from)) return true;
                        undo_vertex(v, c, tv);
                    }
                    undo_vertex(u, c, tu);
                }
            }
        }
        // or open a fresh clique on this edge
        if (vertex_clique_count[static_cast<std::size_t>(u)] < 2 &&
            vertex_clique_count[static_cast<std::size_t>(v)] < 2) {
            int c = static_cast<int>(clique_vertices.size());
            clique_vertices.push_back({u, v});
            vertex_clique_count[static_cast<std::size_t>(u)]++;
            vertex_clique_count[static_cast<std::size_t>(v)]++;
            edge_clique[from] = c;
            if (solve(from + 1)) return true;
            edge_clique[from] = -1;
            vertex_clique_count[static_cast<std::size_t>(u)]--;
            vertex_clique_count[static_cast<std::size_t>(v)]--;
            clique_vertices.pop_back();
        }
        return false;
    }
};

} // namespace detail

/// Searches for a Krausz partition by backtracking over edges in
/// degree-descending order. Exact for all inputs; capped by max_n.
inline std::optional<KrauszPartition> krausz_partition(const SimpleGraph& g,
                                                       int max_n = krausz_default_limit) {
    if (g.vertex_count() > max_n)
        throw capacity_error("krausz_partition: " + std::to_string(g.vertex_count()) +
                             " vertices exceeds limit " + std::to_string(max_n));
    detail::KrauszState st;
    st.g = &g;
    st.edges = g.edges();
    std::stable_sort(st.edges.begin(), st.edges.end(), [&](auto a, auto b) {
        int da = g.degree(a.first) + g.degree(a.second);
        int db = g.degree(b.first) + g.degree(b.second);
        return da > db;
    });
    st.edge_clique.assign(st.edges.size(), -1);
    st.vertex_clique_count.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    st.edge_ids.assign(static_cast<std::size_t>(g.vertex_count()), {});
    for (std::size_t e = 0; e < st.edges.size(); ++e) {
        st.edge_ids[static_cast<std::size_t>(st.edges[e].first)].push_back(static_cast<int>(e));
        st.edge_ids[static_cast<std::size_t>(st.edges[e].second)].push_back(static_cast<int>(e));
    }
    if (!st.solve(0)) return std::nullopt;
    KrauszPartition out;
    out.cliques = std::move(st.clique_vertices);
    for (auto& c : out.cliques) std::sort(c.begin(), c.end());
    return out;
}

inline bool is_line_graph(const SimpleGraph& g, int max_n = krausz_default_limit) {
    return krausz_partition(g, max_n).has_value();
}

/// 3-regular specialization: true iff G = K4 or every open neighborhood
/// induces one edge plus one isolated vertex. Agrees with is_line_graph on
/// every cubic input.
inline bool cubic_line_check(const SimpleGraph& g) {
    if (is_regular(g) != std::optional<int>(3))
        throw input_error("cubic_line_check requires a 3-regular graph");
    if (g.vertex_count() == 4) return true; // K4 is the only cubic graph on 4 vertices
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int inner = static_cast<int>(g.adjacent(nb[0], nb[1])) + static_cast<int>(g.adjacent(nb[0], nb[2])) +
                    static_cast<int>(g.adjacent(nb[1], nb[2]));
        if (inner != 1) return false;
    }
    return true;
}

} // namespace specgraph
