#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

enum class VertexLabel { slim, fat };

/// Graph with a slim/fat vertex labeling. Valid iff every fat vertex has a
/// slim neighbor and fat vertices are pairwise non-adjacent.
struct HoffmanGraph {
    SimpleGraph graph;
    std::vector<VertexLabel> labels;

    bool is_slim(int v) const { return labels[static_cast<std::size_t>(v)] == VertexLabel::slim; }
    bool is_fat(int v) const { return labels[static_cast<std::size_t>(v)] == VertexLabel::fat; }

    std::vector<int> slim_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (is_slim(v)) out.push_back(v);
        return out;
    }
    std::vector<int> fat_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (is_fat(v)) out.push_back(v);
        return out;
    }
};

inline HoffmanGraph make_hoffman(SimpleGraph graph, std::vector<VertexLabel> labels) {
    if (static_cast<int>(labels.size()) != graph.vertex_count())
        throw input_error("make_hoffman: label vector size mismatch");
    HoffmanGraph h{std::move(graph), std::move(labels)};
    for (int v = 0; v < h.graph.vertex_count(); ++v) {
        if (!h.is_fat(v)) continue;
        bool has_slim = false;
        for (int w : h.graph.neighbors(v)) {
            if (h.is_fat(w))
                throw validity_error("adjacent fat vertices " + std::to_string(v) + "," + std::to_string(w));
            has_slim = true;
        }
        if (!has_slim) throw validity_error("fat vertex " + std::to_string(v) + " has no slim neighbor");
    }
    return h;
}

/// Regards an ordinary graph as the all-slim Hoffman graph.
inline HoffmanGraph as_hoffman(SimpleGraph g) {
    std::vector<VertexLabel> labels(static_cast<std::size_t>(g.vertex_count()), VertexLabel::slim);
    return HoffmanGraph{std::move(g), std::move(labels)};
}

/// B = A_s - C C^T, indexed by slim vertices in increasing vertex order.
inline IntMatrix b_matrix(const HoffmanGraph& h) {
    const auto slims = h.slim_vertices();
    const int s = static_cast<int>(slims.size());
    std::vector<int> pos(static_cast<std::size_t>(h.graph.vertex_count()), -1);
    for (int i = 0; i < s; ++i) pos[static_cast<std::size_t>(slims[static_cast<std::size_t>(i)])] = i;
    IntMatrix b(static_cast<std::size_t>(s), std::vector<long long>(static_cast<std::size_t>(s), 0));
    for (int i = 0; i < s; ++i)
        for (int w : h.graph.neighbors(slims[static_cast<std::size_t>(i)])) {
            if (h.is_slim(w)) {
                int j = pos[static_cast<std::size_t>(w)];
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
            }
        }
    // subtract C C^T: (i,j) entry is the number of common fat neighbors
    for (int f = 0; f < h.graph.vertex_count(); ++f) {
        if (!h.is_fat(f)) continue;
        const auto& nb = h.graph.neighbors(f);
        for (int a : nb)
            for (int b2 : nb) {
                int i = pos[static_cast<std::size_t>(a)], j = pos[static_cast<std::size_t>(b2)];
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= 1;
            }
    }
    return b;
}

inline double hlambda_min(const HoffmanGraph& h, double tol = 1e-9) {
    auto b = b_matrix(h);
    const int s = static_cast<int>(b.size());
    if (s == 0) throw input_error("hlambda_min: no slim vertices");
    SymMatrix m(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            m.at(i, j) = static_cast<double>(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return lambda_min(m, tol);
}

inline SimpleGraph slim_graph(const HoffmanGraph& h) {
    auto slims = h.slim_vertices();
    return induced_subgraph(h.graph, slims);
}

// ---- sums ------------------------------------------------------------------

/// Sum specification: summands plus equivalence classes of fat vertices that
/// are identified in the sum. Each class entry is (summand index, fat vertex
/// id within that summand); fats not mentioned stay private.
struct SumSpec {
    std::vector<HoffmanGraph> summands;
    std::vector<std::vector<std::pair<int, int>>> fat_classes;
};

/// Result of hsum with the bookkeeping needed to audit the decomposition.
struct HoffmanSum {
    HoffmanGraph hoffman;
    std::vector<std::vector<int>> parts; // slim vertices of the sum, by summand
};

namespace detail {

inline void check_sum_spec(const SumSpec& spec) {
    for (const auto& cls : spec.fat_classes) {
        std::vector<int> seen;
        for (auto [si, fv] : cls) {
            if (si < 0 || si >= static_cast<int>(spec.summands.size()))
                throw input_error("hsum: summand index out of range");
            const auto& h = spec.summands[static_cast<std::size_t>(si)];
            if (fv < 0 || fv >= h.graph.vertex_count() || !h.is_fat(fv))
                throw input_error("hsum: fat class entry is not a fat vertex");
            if (std::find(seen.begin(), seen.end(), si) != seen.end())
                throw input_error("hsum: fat class uses a summand twice");
            seen.push_back(si);
        }
    }
}

} // namespace detail

/// Sum of Hoffman graphs: slim vertex sets are kept disjoint, fat classes are
/// merged, and slim vertices of different summands become adjacent exactly
/// when they share a merged fat neighbor. A cross pair acquiring two common
/// fats violates the sum conditions and raises a validity error.
inline HoffmanSum hsum(const SumSpec& spec) {
    if (spec.summands.empty()) throw input_error("hsum: no summands");
    detail::check_sum_spec(spec);
    const int ns = static_cast<int>(spec.summands.size());

    // global slim ids: summand by summand
    std::vector<std::vector<int>> slim_global(static_cast<std::size_t>(ns));
    std::vector<int> summand_of_slim;
    int next = 0;
    for (int s = 0; s < ns; ++s) {
        auto slims = spec.summands[static_cast<std::size_t>(s)].slim_vertices();
        if (slims.empty()) throw input_error("hsum: summand without slim vertices");
        for (std::size_t i = 0; i < slims.size(); ++i) {
            slim_global[static_cast<std::size_t>(s)].push_back(next++);
            summand_of_slim.push_back(s);
        }
    }
    const int total_slim = next;

    // fat ids: shared classes first, then private fats
    std::map<std::pair<int, int>, int> fat_global; // (summand, fat vertex) -> global id
    for (std::size_t c = 0; c < spec.fat_classes.size(); ++c) {
        for (auto [si, fv] : spec.fat_classes[c]) {
            if (fat_global.count({si, fv})) throw input_error("hsum: fat vertex in two classes");
            fat_global[{si, fv}] = total_slim + static_cast<int>(c);
        }
    }
    int next_fat = total_slim + static_cast<int>(spec.fat_classes.size());
    for (int s = 0; s < ns; ++s)
        for (int f : spec.summands[static_cast<std::size_t>(s)].fat_vertices())
            if (!fat_global.count({s, f})) fat_global[{s, f}] = next_fat++;

    SimpleGraph g(next_fat);
    std::vector<std::vector<int>> fat_slims(static_cast<std::size_t>(next_fat - total_slim));
    for (int s = 0; s < ns; ++s) {
        const auto& h = spec.summands[static_cast<std::size_t>(s)];
        auto slims = h.slim_vertices();
        std::vector<int> pos(static_cast<std::size_t>(h.graph.vertex_count()), -1);
        for (std::size_t i = 0; i < slims.size(); ++i)
            pos[static_cast<std::size_t>(slims[i])] = slim_global[static_cast<std::size_t>(s)][i];
        for (int v = 0; v < h.graph.vertex_count(); ++v) {
            if (h.is_slim(v)) {
                for (int w : h.graph.neighbors(v))
                    if (h.is_slim(w) && w > v)
                        g.add_edge(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);
            } else {
                int gf = fat_global.at({s, v});
                for (int w : h.graph.neighbors(v)) {
                    int gs = pos[static_cast<std::size_t>(w)];
                    g.add_edge(gf, gs);
                    fat_slims[static_cast<std::size_t>(gf - total_slim)].push_back(gs);
                }
            }
        }
    }
    // Cross-summand slim adjacency through merged fats. Cross pairs carry no
    // edges before this loop, so a pre-existing edge means a second common fat.
    for (const auto& group : fat_slims) {
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                int a = group[i], b = group[j];
                if (summand_of_slim[static_cast<std::size_t>(a)] ==
                    summand_of_slim[static_cast<std::size_t>(b)])
                    continue;
                if (g.adjacent(a, b))
                    throw validity_error("hsum: slim vertices " + std::to_string(a) + "," +
                                         std::to_string(b) + " share two merged fat vertices");
                g.add_edge(a, b);
            }
    }
    std::vector<VertexLabel> labels(static_cast<std::size_t>(next_fat), VertexLabel::fat);
    for (int i = 0; i < total_slim; ++i) labels[static_cast<std::size_t>(i)] = VertexLabel::slim;

    HoffmanSum sum{make_hoffman(std::move(g), std::move(labels)), std::move(slim_global)};
    return sum;
}

/// True iff the parts (a partition of the slim vertices) satisfy the sum
/// conditions: cross-part slim pairs share at most one fat neighbor and are
/// adjacent exactly when they share one.
inline bool verify_decomposition(const HoffmanGraph& h, const std::vector<std::vector<int>>& parts) {
    const int n = h.graph.vertex_count();
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) {
            if (v < 0 || v >= n || !h.is_slim(v)) throw input_error("verify_decomposition: bad part entry");
            if (part_of[static_cast<std::size_t>(v)] != -1)
                throw input_error("verify_decomposition: vertex in two parts");
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    for (int v = 0; v < n; ++v)
        if (h.is_slim(v) && part_of[static_cast<std::size_t>(v)] == -1)
            throw input_error("verify_decomposition: parts do not cover the slim vertices");

    // fat neighbor lists per slim vertex (sorted, since neighbor lists are)
    std::vector<std::vector<int>> fats_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (h.is_slim(v))
            for (int w : h.graph.neighbors(v))
                if (h.is_fat(w)) fats_of[static_cast<std::size_t>(v)].push_back(w);

    // adjacent cross-part pairs must share exactly one fat
    for (int v = 0; v < n; ++v) {
        if (!h.is_slim(v)) continue;
        for (int w : h.graph.neighbors(v)) {
            if (w <= v || !h.is_slim(w)) continue;
            if (part_of[static_cast<std::size_t>(v)] == part_of[static_cast<std::size_t>(w)]) continue;
            const auto& a = fats_of[static_cast<std::size_t>(v)];
            const auto& b = fats_of[static_cast<std::size_t>(w)];
            int shared = 0;
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) { ++shared; ++i; ++j; }
                else if (a[i] < b[j]) ++i;
                else ++j;
            }
            if (shared != 1) return false;
        }
    }
    // a common fat forces adjacency (covers non-adjacent pairs sharing fats)
    for (int f = 0; f < n; ++f) {
        if (!h.is_fat(f)) continue;
        const auto& nb = h.graph.neighbors(f);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (part_of[static_cast<std::size_t>(nb[i])] == part_of[static_cast<std::size_t>(nb[j])])
                    continue;
                if (!h.graph.adjacent(nb[i], nb[j])) return false;
            }
    }
    return true;
}

/// Ordinary graph obtained by replacing each fat vertex with a slim n-clique
/// joined to the fat vertex's neighbors. Slim vertices keep ids 0..s-1; the
/// clique of the j-th fat occupies s + j*n .. s + (j+1)*n - 1.
inline SimpleGraph clique_extension(const HoffmanGraph& h, int n) {
    if (n < 1) throw input_error("clique_extension: n must be >= 1");
    const auto slims = h.slim_vertices();
    const auto fats = h.fat_vertices();
    const int s = static_cast<int>(slims.size());
    std::vector<int> pos(static_cast<std::size_t>(h.graph.vertex_count()), -1);
    for (int i = 0; i < s; ++i) pos[static_cast<std::size_t>(slims[static_cast<std::size_t>(i)])] = i;
    SimpleGraph g(s + n * static_cast<int>(fats.size()));
    for (int i = 0; i < s; ++i)
        for (int w : h.graph.neighbors(slims[static_cast<std::size_t>(i)]))
            if (h.is_slim(w) && pos[static_cast<std::size_t>(w)] > i)
                g.add_edge(i, pos[static_cast<std::size_t>(w)]);
    for (std::size_t j = 0; j < fats.size(); ++j) {
        const int base = s + static_cast<int>(j) * n;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) g.add_edge(base + a, base + b);
        for (int w : h.graph.neighbors(fats[j]))
            for (int a = 0; a < n; ++a) g.add_edge(pos[static_cast<std::size_t>(w)], base + a);
    }
    return g;
}

// ---- catalog ----------------------------------------------------------------

enum class CatalogName { H2, H3, H8, H9, HWN };

/// Catalog of the special Hoffman graphs used by the constructions, with their
/// certified smallest eigenvalues:
///   H2  : one slim vertex, two fats. B = [-2].
///   H3  : slim edge, one shared fat plus a private fat each. B = -2I.
///   H8  : slim path x1-x2-x3 (x2 central), one private fat each. lmin = -1-sqrt(2).
///   H9  : slims x1..x4 with edges x1x2, x1x3, x3x4; fats F~x1, E~x3, D~{x2,x4}.
///         lmin = -1-sqrt(2).
///   HWN : slim paw (triangle x1x2x3, pendant x4 at x1), one private fat each.
///         lmin = alpha1.
inline HoffmanGraph catalog(CatalogName name) {
    auto fat_tail = [](SimpleGraph g, int nslim) {
        std::vector<VertexLabel> labels(static_cast<std::size_t>(g.vertex_count()), VertexLabel::fat);
        for (int i = 0; i < nslim; ++i) labels[static_cast<std::size_t>(i)] = VertexLabel::slim;
        return make_hoffman(std::move(g), std::move(labels));
    };
    switch (name) {
    case CatalogName::H2:
        return fat_tail(make_graph(3, {{0, 1}, {0, 2}}), 1);
    case CatalogName::H3:
        return fat_tail(make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}), 2);
    case CatalogName::H8:
        return fat_tail(make_graph(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}), 3);
    case CatalogName::H9:
        return fat_tail(make_graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {2, 5}, {1, 6}, {3, 6}}), 4);
    case CatalogName::HWN:
        return fat_tail(make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {0, 4}, {3, 5}, {1, 6}, {2, 7}}), 4);
    }
    throw input_error("unknown catalog entry");
}

inline CatalogName parse_catalog_name(const std::string& s) {
    if (s == "H2") return CatalogName::H2;
    if (s == "H3") return CatalogName::H3;
    if (s == "H8") return CatalogName::H8;
    if (s == "H9") return CatalogName::H9;
    if (s == "HWN") return CatalogName::HWN;
    throw input_error("unknown catalog entry '" + s + "' (known: H2, H3, H8, H9, HWN)");
}

inline std::string catalog_name_string(CatalogName n) {
    switch (n) {
    case CatalogName::H2: return "H2";
    case CatalogName::H3: return "H3";
    case CatalogName::H8: return "H8";
    case CatalogName::H9: return "H9";
    case CatalogName::HWN: return "HWN";
    }
    return {};
}

/// Documented exact smallest eigenvalue of a catalog entry as a minimal
/// polynomial (for exact certificates) and a double (for numeric checks).
inline IntPolynomial catalog_lambda_min_poly(CatalogName name) {
    switch (name) {
    case CatalogName::H2:
    case CatalogName::H3: return IntPolynomial{2, 1};      // x + 2
    case CatalogName::H8:
    case CatalogName::H9: return IntPolynomial{-1, 2, 1};  // x^2 + 2x - 1
    case CatalogName::HWN: return IntPolynomial{-2, -2, 2, 1};
    }
    throw input_error("unknown catalog entry");
}

/// Colored canonical certificate of a Hoffman graph (slim/fat aware).
inline std::string hoffman_canonical_form(const HoffmanGraph& h, int max_n = canonical_default_limit) {
    std::vector<int> colors(static_cast<std::size_t>(h.graph.vertex_count()));
    for (int v = 0; v < h.graph.vertex_count(); ++v) colors[static_cast<std::size_t>(v)] = h.is_fat(v) ? 1 : 0;
    return canonical_form(h.graph, colors, max_n);
}

inline bool hoffman_isomorphic(const HoffmanGraph& a, const HoffmanGraph& b,
                               int max_n = canonical_default_limit) {
    if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
    return hoffman_canonical_form(a, max_n) == hoffman_canonical_form(b, max_n);
}

} // namespace specgraph
