#pragma once

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/constants.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/enumeration.hpp"
#include "specgraph/eta3.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/hoffman.hpp"
#include "specgraph/line_graph.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct CriterionLog {
    bool ok = true;
    std::ostringstream detail;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

inline SimpleGraph permute_graph(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out(g.vertex_count());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace detail

/// Runs the full verification suite: one outcome per criterion, in order.
/// Every threshold is fixed here; nothing is deferred to calibration.
inline std::vector<CriterionOutcome> run_acceptance_criteria(std::ostream* progress = nullptr) {
    std::vector<CriterionOutcome> results;
    const double alpha0 = -1.0 - std::sqrt(2.0);
    const double alpha1 = min_root(minimal_polynomial(ConstantName::alpha1), 1e-13);
    const double beta = min_root(minimal_polynomial(ConstantName::beta), 1e-13);

    auto run = [&](int id, const std::string& title, auto&& body) {
        detail::CriterionLog log;
        try {
            body(log);
        } catch (const std::exception& e) {
            log.ok = false;
            log.note(std::string("exception: ") + e.what());
        }
        CriterionOutcome out{id, title, log.ok, log.detail.str()};
        if (progress) {
            (*progress) << (out.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
            if (!out.detail.empty()) (*progress) << "  [" << out.detail << "]";
            (*progress) << std::endl;
        }
        results.push_back(std::move(out));
    };

    run(1, "catalog certificates (exact and numeric)", [&](detail::CriterionLog& log) {
        auto cert = [&](CatalogName name, const IntPolynomial& divisor, double value) {
            auto cp = char_poly(b_matrix(catalog(name)));
            log.check(poly_divides(divisor, cp),
                      catalog_name_string(name) + ": divisor does not divide charpoly(B)");
            double lm = hlambda_min(catalog(name), 1e-12);
            log.check(std::abs(lm - value) < 1e-9,
                      catalog_name_string(name) + ": hlambda_min " + detail::fmt(lm));
        };
        cert(CatalogName::H8, IntPolynomial{-1, 2, 1}, alpha0);
        cert(CatalogName::H9, IntPolynomial{-1, 2, 1}, alpha0);
        cert(CatalogName::HWN, IntPolynomial{-2, -2, 2, 1}, alpha1);
    });

    run(2, "18-vertex cubic witness from K_{2,3} attains -1-sqrt(2)", [&](detail::CriterionLog& log) {
        auto rep = build_gk(semiregular_bipartite(3, 1));
        log.check(rep.graph.vertex_count() == 18, "order != 18");
        log.check(is_connected(rep.graph), "not connected");
        log.check(is_regular(rep.graph) == std::optional<int>(3), "not 3-regular");
        log.check(std::abs(rep.lambda_min - alpha0) < 1e-9,
                  "lambda_min " + detail::fmt(rep.lambda_min));
        log.check(find_induced(rep.graph, PatternKind::three_claw).has_value(), "no induced 3-claw");
        log.check(!is_line_graph(rep.graph), "is a line graph");
    });

    run(3, "k-regular family in [-1-sqrt(2), -2), k in 3..8, a in 1..3", [&](detail::CriterionLog& log) {
        for (int k = 3; k <= 8; ++k) {
            std::set<int> orders;
            for (int a = 1; a <= 3; ++a) {
                auto rep = build_gk(semiregular_bipartite(k, a));
                std::string tag = "k=" + std::to_string(k) + ",a=" + std::to_string(a);
                log.check(is_regular(rep.graph) == std::optional<int>(k), tag + ": not regular");
                log.check(rep.graph.vertex_count() == 3 * a * k * (k - 1), tag + ": wrong order");
                log.check(rep.lambda_min >= alpha0 - 1e-9,
                          tag + ": lambda " + detail::fmt(rep.lambda_min) + " below alpha0");
                log.check(rep.lambda_min < -2.0 - 1e-7, tag + ": lambda not below -2");
                orders.insert(rep.graph.vertex_count());
            }
            log.check(orders.size() == 3, "orders not pairwise distinct at k=" + std::to_string(k));
        }
    });

    run(4, "triangle-free cubic family on 8n vertices, n in 2..6", [&](detail::CriterionLog& log) {
        for (int n = 2; n <= 6; ++n) {
            auto rep = build_triangle_free(n);
            std::string tag = "n=" + std::to_string(n);
            log.check(is_regular(rep.graph) == std::optional<int>(3), tag + ": not cubic");
            log.check(is_triangle_free(rep.graph), tag + ": triangle found");
            log.check(rep.graph.vertex_count() == 8 * n, tag + ": wrong order");
            log.check(rep.lambda_min >= alpha0 - 1e-9, tag + ": below alpha0");
            log.check(rep.lambda_min < -2.0 - 1e-7, tag + ": not below -2");
        }
    });

    run(5, "48-vertex 4-regular instance from the explicit partitions of {1..12}",
        [&](detail::CriterionLog& log) {
            auto rep = build_gk_wn(4, remark_partitions());
            log.check(rep.graph.vertex_count() == 48, "slim count != 48");
            log.check(is_regular(rep.graph) == std::optional<int>(4), "not 4-regular");
            log.check(std::abs(rep.lambda_min - alpha1) < 1e-9,
                      "lambda_min " + detail::fmt(rep.lambda_min));
            // ground 12 = a_eff * k(k-1)(k-2) with a_eff = 1/2; the size
            // formulas then give 4 * a_eff * 24 = 48 slim and
            // 2 * a_eff * (2k^2-4k+1) = 17 fat vertices
            int fat = static_cast<int>(rep.hoffman.fat_vertices().size());
            log.check(fat == 17, "fat count " + std::to_string(fat) + " != 17");
            log.note("fat count 17 = formula at the instance scale (the stated 34 is the a=1 value)");
        });

    run(6, "threshold family in [alpha1, -1-sqrt(2)), k in N*..N*+2, a in 1..2",
        [&](detail::CriterionLog& log) {
            int n_star = compute_threshold_N(1e-9);
            log.check(n_star == 23, "threshold " + std::to_string(n_star) + " != pinned 23");
            for (int k = std::max(4, n_star); k <= n_star + 2; ++k)
                for (int a = 1; a <= 2; ++a) {
                    std::string tag = "k=" + std::to_string(k) + ",a=" + std::to_string(a);
                    auto rep = build_gk_wn(k, default_partitions(k, a));
                    log.check(is_regular(rep.graph) == std::optional<int>(k), tag + ": not regular");
                    log.check(is_connected(rep.graph), tag + ": not connected");
                    log.check(rep.checks.at("lambda_min_ge_alpha1").passed, tag + ": lower bound");
                    log.check(rep.checks.count("lambda_min_lt_alpha0") &&
                                  rep.checks.at("lambda_min_lt_alpha0").passed,
                              tag + ": upper bound");
                    double ub = rep.checks.at("induced_ball_bound").value;
                    log.check(ub < alpha0 - 1e-7, tag + ": induced ball bound " + detail::fmt(ub));
                }
        });

    run(7, "clique-extension convergence: monotone, gap at n=40 below 0.02",
        [&](detail::CriterionLog& log) {
            auto sweep = [&](CatalogName name, double limit) {
                auto seq = limit_sequence(name, 40);
                for (std::size_t i = 1; i < seq.size(); ++i)
                    log.check(seq[i].lambda <= seq[i - 1].lambda + 1e-9,
                              catalog_name_string(name) + ": not monotone at n=" + std::to_string(i + 1));
                for (const auto& pt : seq)
                    log.check(pt.lambda >= limit - 1e-9,
                              catalog_name_string(name) + ": below the limit at n=" + std::to_string(pt.n));
                // minimum valency grows without bound along the sequence
                log.check(seq.back().min_valency > seq.front().min_valency,
                          catalog_name_string(name) + ": min valency did not grow");
                double gap = seq.back().lambda - limit;
                log.check(gap < 0.02, catalog_name_string(name) + ": gap at n=40 is " +
                                          detail::fmt(gap) + " (>= 0.02)");
                return gap;
            };
            sweep(CatalogName::H9, alpha0);
            sweep(CatalogName::HWN, alpha1);
            log.note("the 0.02 bound is unattainable: the true gaps at n=40 are ~0.0285 (H9) "
                     "and ~0.0349 (HWN); convergence is Theta(1/n)");
        });

    run(8, "exhaustive search: unique cubic graph with smallest eigenvalue beta",
        [&](detail::CriterionLog& log) {
            // stability below the extremal order: bounds 12..14 agree on empty
            for (int bound : {12, 13, 14}) {
                SearchConfig cfg;
                cfg.max_vertices = bound;
                auto res = search_eta3(cfg);
                log.check(res.extremal.empty(),
                          "bound " + std::to_string(bound) + " unexpectedly found a graph");
            }
            // stability at the pinned order 16: bounds 16..18 agree on the singleton
            std::vector<std::string> forms;
            SimpleGraph found;
            BetaCertificate cert;
            for (int bound : {16, 17, 18}) {
                SearchConfig cfg;
                cfg.max_vertices = bound;
                auto res = search_eta3(cfg);
                log.check(res.extremal.size() == 1,
                          "bound " + std::to_string(bound) + ": result set size " +
                              std::to_string(res.extremal.size()));
                if (res.extremal.size() == 1) {
                    forms.push_back(canonical_form(res.extremal.front()));
                    found = res.extremal.front();
                    cert = res.certificates.front();
                }
            }
            log.check(forms.size() == 3 && forms[0] == forms[1] && forms[1] == forms[2],
                      "result sets differ across bounds");
            log.check(is_connected(found) && is_regular(found) == std::optional<int>(3),
                      "extremal graph not connected cubic");
            log.check(found.vertex_count() == 16, "extremal order != pinned 16");
            log.check(cert.verdict == BetaVerdict::equals_beta, "certificate is not EQUALS_BETA");
            log.check(poly_divides(minimal_polynomial(ConstantName::beta), cert.char_poly),
                      "sextic does not divide the characteristic polynomial");
            log.check(std::abs(cert.lambda_min - beta) < 1e-9,
                      "numeric lambda_min " + detail::fmt(cert.lambda_min));
            log.note("(stability checked at {16,17,18}, where the derived extremal order lies; "
                     "bounds {12,13,14} double-checked to agree on the empty set)");
        });

    run(9, "property suites: interlacing, sum theorem, graph6, canonical forms, line checks",
        [&](detail::CriterionLog& log) {
            std::mt19937 rng(20260810);
            auto random_graph = [&](int n, double p) {
                SimpleGraph g(n);
                std::bernoulli_distribution coin(p);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (coin(rng)) g.add_edge(u, v);
                return g;
            };
            // interlacing on 500 random induced-subgraph pairs
            int bad_interlace = 0;
            for (int t = 0; t < 500; ++t) {
                int n = 2 + static_cast<int>(rng() % 9);
                auto g = random_graph(n, 0.5);
                int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
                std::vector<int> verts(static_cast<std::size_t>(n));
                std::iota(verts.begin(), verts.end(), 0);
                std::shuffle(verts.begin(), verts.end(), rng);
                verts.resize(static_cast<std::size_t>(k));
                auto h = induced_subgraph(g, verts);
                if (h.vertex_count() == 0) continue;
                if (lambda_min(h, 1e-11) < lambda_min(g, 1e-11) - 1e-9) ++bad_interlace;
            }
            log.check(bad_interlace == 0, std::to_string(bad_interlace) + " interlacing violations");

            // sum theorem on 50 random catalog sums
            std::vector<CatalogName> names{CatalogName::H2, CatalogName::H3, CatalogName::H8,
                                           CatalogName::H9, CatalogName::HWN};
            int bad_sum = 0;
            for (int t = 0; t < 50; ++t) {
                SumSpec spec;
                int k = 2 + static_cast<int>(rng() % 3);
                double expect = 0.0;
                for (int i = 0; i < k; ++i) {
                    auto nm = names[rng() % names.size()];
                    spec.summands.push_back(catalog(nm));
                    expect = std::min(expect, hlambda_min(catalog(nm), 1e-11));
                }
                for (int i = 0; i + 1 < k; ++i) {
                    int fa = spec.summands[static_cast<std::size_t>(i)].fat_vertices().front();
                    int fb = spec.summands[static_cast<std::size_t>(i + 1)].fat_vertices().back();
                    spec.fat_classes.push_back({{i, fa}, {i + 1, fb}});
                }
                auto sum = hsum(spec);
                if (!verify_decomposition(sum.hoffman, sum.parts) ||
                    std::abs(hlambda_min(sum.hoffman, 1e-11) - expect) > 1e-9)
                    ++bad_sum;
            }
            log.check(bad_sum == 0, std::to_string(bad_sum) + " sum-theorem violations");

            // graph6 round trips
            int bad_g6 = 0;
            for (int t = 0; t < 300; ++t) {
                auto g = random_graph(static_cast<int>(rng() % 9), 0.5);
                if (!(graph6_decode(graph6_encode(g)) == g)) ++bad_g6;
            }
            auto big = build_gk(semiregular_bipartite(4, 1)).graph;
            if (!(graph6_decode(graph6_encode(big)) == big)) ++bad_g6;
            log.check(bad_g6 == 0, std::to_string(bad_g6) + " graph6 round-trip failures");

            // canonical-form permutation invariance
            int bad_canon = 0;
            for (int t = 0; t < 200; ++t) {
                int n = 2 + static_cast<int>(rng() % 8);
                auto g = random_graph(n, 0.45);
                std::vector<int> perm(static_cast<std::size_t>(n));
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                if (canonical_form(g) != canonical_form(detail::permute_graph(g, perm))) ++bad_canon;
            }
            log.check(bad_canon == 0, std::to_string(bad_canon) + " canonical invariance failures");

            // cubic_line_check agrees with the Krausz route on every connected
            // cubic graph with n <= 12
            int bad_line = 0, cubic_count = 0;
            for (const auto& g : enumerate_connected_cubic(12)) {
                ++cubic_count;
                if (cubic_line_check(g) != is_line_graph(g)) ++bad_line;
            }
            log.check(cubic_count == 1 + 2 + 5 + 19 + 85,
                      "enumerated " + std::to_string(cubic_count) + " cubic graphs, expected 112");
            log.check(bad_line == 0, std::to_string(bad_line) + " line-check disagreements");
        });

    run(10, "lambda_min(C5 x K_m) = (-3-sqrt(5))/2 for m in 2..4", [&](detail::CriterionLog& log) {
        const double target = (-3.0 - std::sqrt(5.0)) / 2.0;
        for (int m = 2; m <= 4; ++m) {
            auto g = cartesian_product(cycle_graph(5), complete_graph(m));
            double lm = lambda_min(g, 1e-12);
            log.check(std::abs(lm - target) < 1e-9,
                      "m=" + std::to_string(m) + ": " + detail::fmt(lm));
        }
    });

    return results;
}

} // namespace specgraph
