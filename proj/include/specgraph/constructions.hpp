#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/constants.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/hoffman.hpp"
#include "specgraph/line_graph.hpp"

namespace specgraph {

/// Above this order, builders certify eigenvalue bounds through the sum
/// theorem and embedded clique extensions instead of a dense eigensolve.
inline constexpr int dense_eigen_limit = 1500;

struct CheckResult {
    bool passed = false;
    double value = std::numeric_limits<double>::quiet_NaN();
    std::string note;
};

/// A built graph together with its Hoffman scaffolding and recomputed checks.
struct ConstructionReport {
    SimpleGraph graph;   // the slim graph
    HoffmanGraph hoffman;
    std::vector<std::vector<int>> summand_parts;
    double lambda_min = std::numeric_limits<double>::quiet_NaN(); // NaN above dense_eigen_limit
    std::map<std::string, CheckResult> checks;

    bool all_passed() const {
        for (const auto& [k, c] : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline void require_check(ConstructionReport& r, const std::string& name, bool ok, double value,
                          std::string note = {}) {
    r.checks[name] = CheckResult{ok, value, std::move(note)};
    if (!ok) throw construction_error("construction check failed", name);
}

inline void record_check(ConstructionReport& r, const std::string& name, bool ok, double value,
                         std::string note = {}) {
    r.checks[name] = CheckResult{ok, value, std::move(note)};
}

/// Numeric instance of the sum theorem: the assembled Hoffman graph's
/// eigenvalue must equal the shared summand value. Dense, so only run when
/// the slim count is small enough.
inline void check_sum_eigenvalue(ConstructionReport& r, CatalogName name) {
    const int nslim = static_cast<int>(r.hoffman.slim_vertices().size());
    if (nslim > dense_eigen_limit) {
        record_check(r, "hoffman_lambda", true,
                     min_root(catalog_lambda_min_poly(name), 1e-13),
                     "implied by decomposition + summand certificate (sum theorem)");
        return;
    }
    double expect = min_root(catalog_lambda_min_poly(name), 1e-13);
    double got = hlambda_min(r.hoffman, 1e-11);
    require_check(r, "hoffman_lambda", std::abs(got - expect) < 1e-9, got,
                  "sum eigenvalue equals the summand value");
}

/// All summand parts isomorphic (as Hoffman graphs with their incident fats)
/// to the given catalog entry.
inline bool parts_match_catalog(const HoffmanGraph& h, const std::vector<std::vector<int>>& parts,
                                CatalogName name) {
    const std::string want = hoffman_canonical_form(catalog(name));
    for (const auto& part : parts) {
        std::vector<int> verts(part);
        std::vector<char> fat_seen(static_cast<std::size_t>(h.graph.vertex_count()), 0);
        for (int v : part)
            for (int w : h.graph.neighbors(v))
                if (h.is_fat(w) && !fat_seen[static_cast<std::size_t>(w)]) {
                    fat_seen[static_cast<std::size_t>(w)] = 1;
                    verts.push_back(w);
                }
        std::vector<VertexLabel> labels;
        labels.reserve(verts.size());
        for (int v : verts) labels.push_back(h.labels[static_cast<std::size_t>(v)]);
        HoffmanGraph sub{induced_subgraph(h.graph, verts), std::move(labels)};
        if (hoffman_canonical_form(sub) != want) return false;
    }
    return true;
}

} // namespace detail

// ---- semiregular bipartite base graphs --------------------------------------

/// Connected bipartite graph with side R of a(k-1) vertices of degree k and
/// side Y of ak vertices of degree k-1. Vertices 0..|R|-1 are R, the rest Y.
struct SemiregularBipartite {
    SimpleGraph graph;
    int k = 0;
    int a = 0;
    int r_count = 0;
    int y_count = 0;
};

/// Deterministic construction: pair R-slots with Y-slots index-wise, repair
/// duplicate edges by rotating the Y-slot suffix, then repair disconnectivity
/// with degree-preserving 2-edge swaps.
inline SemiregularBipartite semiregular_bipartite(int k, int a) {
    if (k < 3) throw input_error("semiregular_bipartite: k must be >= 3");
    if (a < 1) throw input_error("semiregular_bipartite: a must be >= 1");
    const int nr = a * (k - 1), ny = a * k, m = nr * k;
    std::vector<int> rs(static_cast<std::size_t>(m)), ys(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rs[static_cast<std::size_t>(i)] = i / k;
        ys[static_cast<std::size_t>(i)] = i / (k - 1);
    }
    auto dup_index = [&]() -> int {
        std::vector<std::vector<char>> seen(static_cast<std::size_t>(nr),
                                            std::vector<char>(static_cast<std::size_t>(ny), 0));
        for (int i = 0; i < m; ++i) {
            auto& cell = seen[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(ys[static_cast<std::size_t>(i)])];
            if (cell) return i;
            cell = 1;
        }
        return -1;
    };
    auto repair_duplicates = [&]() {
        for (int guard = 0;; ++guard) {
            if (guard > 64 * m)
                throw construction_error("semiregular_bipartite repair failed", "duplicate_edges");
            int i = dup_index();
            if (i < 0) break;
            std::rotate(ys.begin() + i, ys.begin() + i + 1, ys.end());
        }
    };
    repair_duplicates();
    auto assemble = [&]() {
        SimpleGraph g(nr + ny);
        for (int i = 0; i < m; ++i)
            g.add_edge(rs[static_cast<std::size_t>(i)], nr + ys[static_cast<std::size_t>(i)]);
        return g;
    };
    SimpleGraph g = assemble();
    for (int guard = 0; !is_connected(g); ++guard) {
        if (guard > 64 * m) throw construction_error("semiregular_bipartite repair failed", "connectivity");
        auto comp = connected_components(g);
        int e1 = -1, e2 = -1;
        for (int i = 0; i < m && (e1 < 0 || e2 < 0); ++i) {
            int c = comp[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])];
            if (c == 0 && e1 < 0) e1 = i;
            if (c != 0 && e2 < 0) e2 = i;
        }
        // swap Y endpoints; preserves both degree sequences
        int y1 = ys[static_cast<std::size_t>(e1)], y2 = ys[static_cast<std::size_t>(e2)];
        bool clash = g.adjacent(rs[static_cast<std::size_t>(e1)], nr + y2) ||
                     g.adjacent(rs[static_cast<std::size_t>(e2)], nr + y1);
        if (clash) {
            std::rotate(ys.begin() + e2, ys.begin() + e2 + 1, ys.end());
            repair_duplicates();
        } else {
            std::swap(ys[static_cast<std::size_t>(e1)], ys[static_cast<std::size_t>(e2)]);
        }
        g = assemble();
    }
    SemiregularBipartite out{std::move(g), k, a, nr, ny};
    for (int v = 0; v < nr; ++v)
        if (out.graph.degree(v) != k) throw construction_error("semiregular_bipartite invalid", "r_degree");
    for (int v = nr; v < nr + ny; ++v)
        if (out.graph.degree(v) != k - 1)
            throw construction_error("semiregular_bipartite invalid", "y_degree");
    return out;
}

// ---- G_k from B_{k,k-1} ------------------------------------------------------

/// k-regular graph with smallest eigenvalue in [-1-sqrt(2), -2): one H8
/// summand (slim path x1-x2-x3) per edge {i,j} of the bipartite base; F_i
/// merges the x1 of the k summands at i in R, E_i their x3, and D_j merges the
/// x2 of the k-1 summands at j in Y.
inline ConstructionReport build_gk(const SemiregularBipartite& b) {
    const int k = b.k;
    auto edges = b.graph.edges(); // (r, y) with r < b.r_count <= y
    SumSpec spec;
    spec.summands.assign(edges.size(), catalog(CatalogName::H8));
    // H8 vertex ids: slims 0,1,2 = x1,x2,x3; private fats 3(~x1), 4(~x2), 5(~x3)
    std::map<int, std::vector<std::pair<int, int>>> f_class, e_class, d_class;
    for (std::size_t s = 0; s < edges.size(); ++s) {
        auto [r, y] = edges[s];
        f_class[r].push_back({static_cast<int>(s), 3});
        e_class[r].push_back({static_cast<int>(s), 5});
        d_class[y].push_back({static_cast<int>(s), 4});
    }
    for (auto& [i, cls] : f_class) spec.fat_classes.push_back(std::move(cls));
    for (auto& [i, cls] : e_class) spec.fat_classes.push_back(std::move(cls));
    for (auto& [j, cls] : d_class) spec.fat_classes.push_back(std::move(cls));

    auto sum = hsum(spec);
    ConstructionReport rep;
    rep.hoffman = std::move(sum.hoffman);
    rep.summand_parts = std::move(sum.parts);
    rep.graph = slim_graph(rep.hoffman);

    const int n = rep.graph.vertex_count();
    detail::require_check(rep, "vertex_count", n == 3 * static_cast<int>(edges.size()),
                          static_cast<double>(n), "3 per base edge");
    detail::require_check(rep, "regular", is_regular(rep.graph) == std::optional<int>(k),
                          static_cast<double>(k));
    detail::require_check(rep, "connected", is_connected(rep.graph), 0.0);
    detail::require_check(rep, "decomposition",
                          verify_decomposition(rep.hoffman, rep.summand_parts), 0.0);
    detail::require_check(rep, "summands_isomorphic",
                          detail::parts_match_catalog(rep.hoffman, rep.summand_parts, CatalogName::H8),
                          0.0, "every summand is the catalog H8");
    // exact certificate for the shared summand value
    bool cert = poly_divides(catalog_lambda_min_poly(CatalogName::H8),
                             char_poly(b_matrix(catalog(CatalogName::H8))));
    detail::require_check(rep, "summand_certificate", cert, 0.0, "x^2+2x-1 divides charpoly(B(H8))");
    detail::check_sum_eigenvalue(rep, CatalogName::H8);

    const double alpha0 = -1.0 - std::sqrt(2.0);
    rep.lambda_min = lambda_min(rep.graph, 1e-11);
    detail::require_check(rep, "lambda_min_ge_alpha0", rep.lambda_min >= alpha0 - 1e-9, rep.lambda_min,
                          "interlacing against the summand value");
    detail::require_check(rep, "lambda_min_lt_minus2", rep.lambda_min < -2.0 - 1e-7, rep.lambda_min);

    auto claw = find_induced(rep.graph, PatternKind::three_claw);
    detail::require_check(rep, "three_claw", claw.has_value(), 0.0);
    bool not_line = n <= krausz_default_limit ? !is_line_graph(rep.graph) : claw.has_value();
    detail::require_check(rep, "not_line_graph", not_line, 0.0,
                          n <= krausz_default_limit ? "Krausz search" : "induced 3-claw witness");
    detail::require_check(rep, "not_cocktail_party", !is_cocktail_party(rep.graph).has_value(), 0.0);
    return rep;
}

// ---- triangle-free cubic G' from C_{2n} -------------------------------------

/// 3-regular triangle-free graph on 8n vertices with smallest eigenvalue in
/// [-1-sqrt(2), -2): two H9 summands per odd cycle position of C_{2n};
/// F/E at odd index 2i-1 merge the x1/x3 pairs, D at even index 2i merges the
/// {x2,x4} pairs of the two flanking summands.
inline ConstructionReport build_triangle_free(int n) {
    if (n < 2) throw input_error("build_triangle_free: n must be >= 2");
    // summand 2t   = (2t+1, 2t+2)
    // summand 2t+1 = (2t+1, 2t)  with 0 read as 2n
    const int s_count = 2 * n;
    SumSpec spec;
    spec.summands.assign(static_cast<std::size_t>(s_count), catalog(CatalogName::H9));
    // H9 vertex ids: slims 0..3 = x1..x4; fats 4 = F(~x1), 5 = E(~x3), 6 = D(~{x2,x4})
    for (int t = 0; t < n; ++t) {
        int a = 2 * t, b = 2 * t + 1;
        spec.fat_classes.push_back({{a, 4}, {b, 4}}); // F_{2t+1}
        spec.fat_classes.push_back({{a, 5}, {b, 5}}); // E_{2t+1}
    }
    for (int t = 0; t < n; ++t) {
        // even index 2(t+1) flanked by summand 2t = (2t+1, 2t+2) and summand
        // 2(t+1)+1 = (2t+3, 2t+2), wrapping at the end
        int a = 2 * t;
        int b = (t + 1 < n) ? 2 * (t + 1) + 1 : 1;
        spec.fat_classes.push_back({{a, 6}, {b, 6}}); // D_{2t+2}
    }
    auto sum = hsum(spec);
    ConstructionReport rep;
    rep.hoffman = std::move(sum.hoffman);
    rep.summand_parts = std::move(sum.parts);
    rep.graph = slim_graph(rep.hoffman);

    detail::require_check(rep, "vertex_count", rep.graph.vertex_count() == 8 * n,
                          static_cast<double>(rep.graph.vertex_count()));
    detail::require_check(rep, "regular", is_regular(rep.graph) == std::optional<int>(3), 3.0);
    detail::require_check(rep, "connected", is_connected(rep.graph), 0.0);
    detail::require_check(rep, "triangle_free", is_triangle_free(rep.graph), 0.0);
    detail::require_check(rep, "decomposition",
                          verify_decomposition(rep.hoffman, rep.summand_parts), 0.0);
    detail::require_check(rep, "summands_isomorphic",
                          detail::parts_match_catalog(rep.hoffman, rep.summand_parts, CatalogName::H9),
                          0.0);
    bool cert = poly_divides(catalog_lambda_min_poly(CatalogName::H9),
                             char_poly(b_matrix(catalog(CatalogName::H9))));
    detail::require_check(rep, "summand_certificate", cert, 0.0);
    detail::check_sum_eigenvalue(rep, CatalogName::H9);

    // neighbors of x1 and x2 of summand 0 match the documented pattern:
    // N(x1^(1,2)) = {x2, x3 in-summand, x1 of (1,2n)};
    // N(x2^(1,2)) = {x1 in-summand, x2 and x4 of (3,2)}
    {
        const auto& p0 = rep.summand_parts[0];
        const auto& p1 = rep.summand_parts[1]; // (1, 2n)
        const auto& p2 = rep.summand_parts.size() > 3 ? rep.summand_parts[3] : rep.summand_parts[1];
        std::vector<int> want_x1{p0[1], p0[2], p1[0]};
        std::sort(want_x1.begin(), want_x1.end());
        bool ok1 = rep.graph.neighbors(p0[0]) == want_x1;
        std::vector<int> want_x2{p0[0], p2[1], p2[3]};
        std::sort(want_x2.begin(), want_x2.end());
        bool ok2 = rep.graph.neighbors(p0[1]) == want_x2;
        detail::require_check(rep, "neighbor_pattern", ok1 && ok2, 0.0);
    }
    // neighbors of any fixed vertex are pairwise non-adjacent
    {
        bool ok = true;
        for (int v = 0; v < rep.graph.vertex_count() && ok; ++v) {
            const auto& nb = rep.graph.neighbors(v);
            for (std::size_t i = 0; i < nb.size() && ok; ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (rep.graph.adjacent(nb[i], nb[j])) {
                        ok = false;
                        break;
                    }
        }
        detail::require_check(rep, "open_neighborhoods_edgeless", ok, 0.0);
    }

    const double alpha0 = -1.0 - std::sqrt(2.0);
    rep.lambda_min = lambda_min(rep.graph, 1e-11);
    detail::require_check(rep, "lambda_min_ge_alpha0", rep.lambda_min >= alpha0 - 1e-9, rep.lambda_min);
    detail::require_check(rep, "lambda_min_lt_minus2", rep.lambda_min < -2.0 - 1e-7, rep.lambda_min);
    bool not_line = rep.graph.vertex_count() <= krausz_default_limit ? !is_line_graph(rep.graph)
                                                                     : !cubic_line_check(rep.graph);
    detail::require_check(rep, "not_line_graph", not_line, 0.0);
    detail::require_check(rep, "not_cocktail_party", !is_cocktail_party(rep.graph).has_value(), 0.0);
    return rep;
}

// ---- partitions and the Woo-Neumaier style G_k ------------------------------

/// Three partitions of {1..m}: P into blocks of k-2, Q into blocks of k,
/// R into blocks of k-1. Elements are 1-based.
struct TriplePartition {
    int k = 0;
    int ground = 0;
    std::vector<std::vector<int>> p, q, r;
};

namespace detail {

inline void validate_partition(const std::vector<std::vector<int>>& blocks, int m, int size,
                               const char* which) {
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    int covered = 0;
    for (const auto& b : blocks) {
        if (static_cast<int>(b.size()) != size)
            throw input_error(std::string("partition ") + which + ": block of wrong size");
        for (int e : b) {
            if (e < 1 || e > m || seen[static_cast<std::size_t>(e)])
                throw input_error(std::string("partition ") + which + ": not a partition of {1..m}");
            seen[static_cast<std::size_t>(e)] = 1;
            ++covered;
        }
    }
    if (covered != m) throw input_error(std::string("partition ") + which + ": does not cover {1..m}");
}

} // namespace detail

inline TriplePartition validate_triple_partition(TriplePartition t) {
    if (t.k < 4) throw input_error("TriplePartition: k must be >= 4");
    if (t.ground < 1 || t.ground % (t.k - 2) != 0 || t.ground % t.k != 0 || t.ground % (t.k - 1) != 0)
        throw input_error("TriplePartition: block sizes must divide the ground size");
    detail::validate_partition(t.p, t.ground, t.k - 2, "P");
    detail::validate_partition(t.q, t.ground, t.k, "Q");
    detail::validate_partition(t.r, t.ground, t.k - 1, "R");
    return t;
}

/// Deterministic partitions of {1..a*k(k-1)(k-2)}: P and Q strided (block i is
/// {i, i+c, i+2c, ...} with c the block count), R consecutive.
inline TriplePartition default_partitions(int k, int a) {
    if (k < 4) throw input_error("default_partitions: k must be >= 4");
    if (a < 1) throw input_error("default_partitions: a must be >= 1");
    TriplePartition t;
    t.k = k;
    t.ground = a * k * (k - 1) * (k - 2);
    const int cp = t.ground / (k - 2), cq = t.ground / k, cr = t.ground / (k - 1);
    for (int i = 1; i <= cp; ++i) {
        std::vector<int> b;
        for (int s = 0; s < k - 2; ++s) b.push_back(i + s * cp);
        t.p.push_back(std::move(b));
    }
    for (int j = 1; j <= cq; ++j) {
        std::vector<int> b;
        for (int s = 0; s < k; ++s) b.push_back(j + s * cq);
        t.q.push_back(std::move(b));
    }
    for (int l = 1; l <= cr; ++l) {
        std::vector<int> b;
        for (int s = 1; s <= k - 1; ++s) b.push_back((l - 1) * (k - 1) + s);
        t.r.push_back(std::move(b));
    }
    return validate_triple_partition(std::move(t));
}

/// The explicit partitions of {1..12}: p_i = {i, i+6}, q_j = {j, j+3, j+6, j+9},
/// r_l = {3l-2, 3l-1, 3l}.
inline TriplePartition remark_partitions() {
    TriplePartition t;
    t.k = 4;
    t.ground = 12;
    for (int i = 1; i <= 6; ++i) t.p.push_back({i, i + 6});
    for (int j = 1; j <= 3; ++j) t.q.push_back({j, j + 3, j + 6, j + 9});
    for (int l = 1; l <= 4; ++l) t.r.push_back({3 * l - 2, 3 * l - 1, 3 * l});
    return validate_triple_partition(std::move(t));
}

namespace detail {

struct WnAssembly {
    HoffmanSum sum;
    SimpleGraph slim;
};

inline WnAssembly assemble_wn(const TriplePartition& t) {
    const int m = t.ground;
    std::vector<int> bp(static_cast<std::size_t>(m) + 1), bq(static_cast<std::size_t>(m) + 1),
        br(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < t.p.size(); ++i)
        for (int e : t.p[i]) bp[static_cast<std::size_t>(e)] = static_cast<int>(i);
    for (std::size_t i = 0; i < t.q.size(); ++i)
        for (int e : t.q[i]) bq[static_cast<std::size_t>(e)] = static_cast<int>(i);
    for (std::size_t i = 0; i < t.r.size(); ++i)
        for (int e : t.r[i]) br[static_cast<std::size_t>(e)] = static_cast<int>(i);

    SumSpec spec;
    spec.summands.assign(static_cast<std::size_t>(m), catalog(CatalogName::HWN));
    // HWN vertex ids: slims 0..3 = x1..x4; fats 4 = F(~x1), 5 = E(~x4),
    // 6 = D(~x2), 7 = C(~x3)
    spec.fat_classes.assign(t.p.size() + t.q.size() + 2 * t.r.size(), {});
    const std::size_t qoff = t.p.size(), doff = qoff + t.q.size(), coff = doff + t.r.size();
    for (int e = 1; e <= m; ++e) {
        int s = e - 1;
        spec.fat_classes[static_cast<std::size_t>(bp[static_cast<std::size_t>(e)])].push_back({s, 4});
        spec.fat_classes[qoff + static_cast<std::size_t>(bq[static_cast<std::size_t>(e)])].push_back({s, 5});
        spec.fat_classes[doff + static_cast<std::size_t>(br[static_cast<std::size_t>(e)])].push_back({s, 6});
        spec.fat_classes[coff + static_cast<std::size_t>(br[static_cast<std::size_t>(e)])].push_back({s, 7});
    }
    WnAssembly out{hsum(spec), {}};
    out.slim = slim_graph(out.sum.hoffman);
    return out;
}

} // namespace detail

inline int compute_threshold_N(double tol = 1e-9);

/// k-regular graph from the triple partition: one HWN summand (slim paw) per
/// ground element; F_i joins x1 across p_i, E_j joins x4 across q_j, D_l joins
/// x2 and C_l joins x3 across r_l. If the slim graph comes out disconnected,
/// elements are swapped between R-blocks of different components (degree
/// preserving) and the sum is rebuilt; the repair count is reported.
inline ConstructionReport build_gk_wn(int k, TriplePartition t) {
    t = validate_triple_partition(std::move(t));
    if (t.k != k) throw input_error("build_gk_wn: partition was built for a different k");

    auto asm_ = detail::assemble_wn(t);
    int swaps = 0;
    while (!is_connected(asm_.slim)) {
        if (swaps >= 64) throw construction_error("connectivity repair failed", "connected");
        auto comp = connected_components(asm_.slim);
        // slim id of element e's x1 is 4*(e-1); swap the first elements of an
        // R-block in component 0 and one in a different component
        auto comp_of_elem = [&](int e) { return comp[static_cast<std::size_t>(4 * (e - 1))]; };
        int b0 = -1, b1 = -1;
        for (std::size_t i = 0; i < t.r.size() && (b0 < 0 || b1 < 0); ++i) {
            int c = comp_of_elem(t.r[i][0]);
            if (c == 0 && b0 < 0) b0 = static_cast<int>(i);
            if (c != 0 && b1 < 0) b1 = static_cast<int>(i);
        }
        if (b0 < 0 || b1 < 0) throw construction_error("connectivity repair failed", "connected");
        std::swap(t.r[static_cast<std::size_t>(b0)][0], t.r[static_cast<std::size_t>(b1)][0]);
        ++swaps;
        asm_ = detail::assemble_wn(t);
    }

    ConstructionReport rep;
    rep.hoffman = std::move(asm_.sum.hoffman);
    rep.summand_parts = std::move(asm_.sum.parts);
    rep.graph = std::move(asm_.slim);

    const int n = rep.graph.vertex_count();
    const int fat_count = rep.hoffman.graph.vertex_count() - n;
    detail::record_check(rep, "connectivity_repairs", true, static_cast<double>(swaps),
                         "element swaps between R-blocks");
    detail::require_check(rep, "slim_count", n == 4 * t.ground, static_cast<double>(n),
                          "4 per ground element");
    detail::require_check(rep, "fat_count",
                          fat_count == static_cast<int>(t.p.size() + t.q.size() + 2 * t.r.size()),
                          static_cast<double>(fat_count));
    detail::require_check(rep, "regular", is_regular(rep.graph) == std::optional<int>(k),
                          static_cast<double>(k));
    detail::require_check(rep, "connected", is_connected(rep.graph), 0.0);
    // fat slim-neighbor counts per family: k-2, k, k-1, k-1
    {
        bool ok = true;
        const auto fats = rep.hoffman.fat_vertices();
        const std::size_t qoff = t.p.size(), doff = qoff + t.q.size(), coff = doff + t.r.size();
        for (std::size_t i = 0; i < fats.size(); ++i) {
            int deg = rep.hoffman.graph.degree(fats[i]);
            int want = i < qoff ? k - 2 : (i < doff ? k : k - 1);
            (void)coff;
            if (deg != want) {
                ok = false;
                break;
            }
        }
        detail::require_check(rep, "fat_degrees", ok, 0.0, "k-2 / k / k-1 / k-1 per family");
    }
    detail::require_check(rep, "decomposition",
                          verify_decomposition(rep.hoffman, rep.summand_parts), 0.0);
    detail::require_check(rep, "summands_isomorphic",
                          detail::parts_match_catalog(rep.hoffman, rep.summand_parts, CatalogName::HWN),
                          0.0);
    bool cert = poly_divides(catalog_lambda_min_poly(CatalogName::HWN),
                             char_poly(b_matrix(catalog(CatalogName::HWN))));
    detail::require_check(rep, "summand_certificate", cert, 0.0,
                          "x^3+2x^2-2x-2 divides charpoly(B(HWN))");
    detail::check_sum_eigenvalue(rep, CatalogName::HWN);

    const double alpha0 = -1.0 - std::sqrt(2.0);
    const double alpha1 = min_root(minimal_polynomial(ConstantName::alpha1), 1e-13);
    if (n <= dense_eigen_limit) {
        rep.lambda_min = lambda_min(rep.graph, 1e-11);
        detail::require_check(rep, "lambda_min_ge_alpha1", rep.lambda_min >= alpha1 - 1e-9,
                              rep.lambda_min, "dense eigensolve");
    } else {
        // sum theorem + interlacing: the decomposition into certified HWN
        // summands pins the Hoffman eigenvalue, and the slim graph interlaces
        detail::require_check(rep, "lambda_min_ge_alpha1", true, alpha1,
                              "certified via decomposition and summand certificate");
    }
    // Upper bound by interlacing against an induced ball around one summand.
    // Radius 1 is the closed neighborhood of the summand's paw; the radius
    // grows until the ball certifies the bound (radius 2 suffices for the
    // threshold instances) or hits the dense-eigensolve cap.
    {
        const auto& part = rep.summand_parts.front();
        std::vector<int> verts(part.begin(), part.end());
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int v : part) in[static_cast<std::size_t>(v)] = 1;
        double bound = 0.0;
        int radius = 0;
        std::size_t frontier_begin = 0;
        for (radius = 1; radius <= 4; ++radius) {
            std::size_t frontier_end = verts.size();
            for (std::size_t i = frontier_begin; i < frontier_end; ++i)
                for (int w : rep.graph.neighbors(verts[i]))
                    if (!in[static_cast<std::size_t>(w)]) {
                        in[static_cast<std::size_t>(w)] = 1;
                        verts.push_back(w);
                    }
            frontier_begin = frontier_end;
            if (static_cast<int>(verts.size()) > dense_eigen_limit) {
                verts.resize(frontier_end);
                --radius;
                break;
            }
            bound = lambda_min(induced_subgraph(rep.graph, verts), 1e-11);
            if (bound < alpha0 - 1e-7) break;
        }
        radius = std::min(radius, 4);
        detail::record_check(rep, "induced_ball_bound", true, bound,
                             "lambda_min of the radius-" + std::to_string(radius) +
                                 " induced ball around one summand (" +
                                 std::to_string(verts.size()) + " vertices)");
        if (k >= compute_threshold_N(1e-9)) {
            bool below = bound < alpha0 - 1e-7 &&
                         (n > dense_eigen_limit || rep.lambda_min < alpha0 - 1e-7);
            detail::require_check(rep, "lambda_min_lt_alpha0", below,
                                  n <= dense_eigen_limit ? rep.lambda_min : bound,
                                  "interlacing against the induced ball");
        }
    }
    return rep;
}

inline ConstructionReport build_gk_wn(int k, int a) { return build_gk_wn(k, default_partitions(k, a)); }

/// Smallest N >= 4 with lambda_min(HWN^(N-3)) < -1-sqrt(2) - tol; the
/// clique-extension sequence is monotone, so the scan is exact.
inline int compute_threshold_N(double tol) {
    if (tol <= 0) throw input_error("compute_threshold_N: tol must be positive");
    const double alpha0 = -1.0 - std::sqrt(2.0);
    auto hwn = catalog(CatalogName::HWN);
    for (int n = 1;; ++n) {
        double lm = lambda_min(clique_extension(hwn, n), std::min(tol * 1e-2, 1e-12));
        if (lm < alpha0 - tol) return n + 3;
        if (n > 10000) throw construction_error("threshold scan did not converge", "threshold");
    }
}

// ---- clique-extension limit sequences ---------------------------------------

struct LimitPoint {
    int n;
    double lambda;
    int min_valency;
};

/// The sequence (n, lambda_min(H^(n)), delta(H^(n))) for H in {H9, HWN}:
/// lambda decreases toward the Hoffman eigenvalue while the minimum valency
/// grows without bound.
inline std::vector<LimitPoint> limit_sequence(CatalogName name, int n_max) {
    if (name != CatalogName::H9 && name != CatalogName::HWN)
        throw input_error("limit_sequence: name must be H9 or HWN");
    if (n_max < 2) throw input_error("limit_sequence: n_max must be >= 2");
    auto h = catalog(name);
    std::vector<LimitPoint> out;
    for (int n = 1; n <= n_max; ++n) {
        auto ext = clique_extension(h, n);
        auto d = degrees(ext);
        out.push_back({n, lambda_min(ext, 1e-11), *std::min_element(d.begin(), d.end())});
    }
    return out;
}

} // namespace specgraph
