#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "specgraph/canonical.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/line_graph.hpp"

using namespace specgraph;

namespace {
constexpr double kAlpha0 = -2.414213562373095048802;
constexpr double kAlpha1 = -2.481194304092015622634;
} // namespace

TEST_CASE("semiregular bipartite instances") {
    auto b31 = semiregular_bipartite(3, 1);
    CHECK(b31.graph.vertex_count() == 5);
    CHECK(is_isomorphic(b31.graph, complete_bipartite_graph(2, 3)));

    auto b41 = semiregular_bipartite(4, 1);
    CHECK(b41.graph.vertex_count() == 7);
    std::vector<int> d = degrees(b41.graph);
    std::sort(d.begin(), d.end(), std::greater<>());
    CHECK(d == std::vector<int>{4, 4, 4, 3, 3, 3, 3});

    auto b32 = semiregular_bipartite(3, 2);
    CHECK(b32.graph.vertex_count() == 10);
    CHECK(is_connected(b32.graph));
    for (int v = 0; v < b32.r_count; ++v) CHECK(b32.graph.degree(v) == 3);
    for (int v = b32.r_count; v < 10; ++v) CHECK(b32.graph.degree(v) == 2);

    CHECK_THROWS_AS(semiregular_bipartite(2, 1), input_error);
    CHECK_THROWS_AS(semiregular_bipartite(3, 0), input_error);
}

TEST_CASE("semiregular bipartite across the supported range") {
    for (int k = 3; k <= 12; ++k)
        for (int a = 1; a <= 5; ++a) {
            auto b = semiregular_bipartite(k, a);
            CAPTURE(k, a);
            REQUIRE(is_connected(b.graph));
            REQUIRE(b.graph.vertex_count() == a * (2 * k - 1));
            for (int v = 0; v < b.r_count; ++v) REQUIRE(b.graph.degree(v) == k);
            for (int v = b.r_count; v < b.graph.vertex_count(); ++v)
                REQUIRE(b.graph.degree(v) == k - 1);
        }
}

TEST_CASE("G_3 from K_{2,3} attains -1-sqrt(2)") {
    auto rep = build_gk(semiregular_bipartite(3, 1));
    CHECK(rep.graph.vertex_count() == 18);
    CHECK(is_regular(rep.graph) == std::optional<int>(3));
    CHECK(is_connected(rep.graph));
    CHECK(std::abs(rep.lambda_min - kAlpha0) < 1e-9);
    CHECK(find_induced(rep.graph, PatternKind::three_claw).has_value());
    CHECK_FALSE(is_line_graph(rep.graph));
    CHECK(rep.all_passed());
}

TEST_CASE("G_k family small sweep") {
    for (int k = 3; k <= 5; ++k) {
        auto rep = build_gk(semiregular_bipartite(k, 1));
        CAPTURE(k);
        CHECK(rep.graph.vertex_count() == 3 * k * (k - 1));
        CHECK(is_regular(rep.graph) == std::optional<int>(k));
        CHECK(rep.lambda_min >= kAlpha0 - 1e-9);
        CHECK(rep.lambda_min < -2.0 - 1e-7);
        CHECK(rep.all_passed());
    }
    // non-isomorphic witnesses across a: orders differ
    auto r1 = build_gk(semiregular_bipartite(3, 1));
    auto r2 = build_gk(semiregular_bipartite(3, 2));
    auto r3 = build_gk(semiregular_bipartite(3, 3));
    CHECK(r1.graph.vertex_count() < r2.graph.vertex_count());
    CHECK(r2.graph.vertex_count() < r3.graph.vertex_count());
}

TEST_CASE("triangle-free cubic family") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = build_triangle_free(n);
        CAPTURE(n);
        CHECK(rep.graph.vertex_count() == 8 * n);
        CHECK(is_regular(rep.graph) == std::optional<int>(3));
        CHECK(is_triangle_free(rep.graph));
        CHECK(rep.lambda_min >= kAlpha0 - 1e-9);
        CHECK(rep.lambda_min < -2.0 - 1e-7);
        CHECK(rep.all_passed());
        CHECK(rep.checks.at("neighbor_pattern").passed);
    }
    CHECK_THROWS_AS(build_triangle_free(1), input_error);
}

TEST_CASE("partition constructors") {
    auto rp = remark_partitions();
    CHECK(rp.ground == 12);
    CHECK(rp.p.size() == 6);
    CHECK(rp.q.size() == 3);
    CHECK(rp.r.size() == 4);
    for (const auto& b : rp.p) CHECK(b.size() == 2);
    for (const auto& b : rp.q) CHECK(b.size() == 4);
    for (const auto& b : rp.r) CHECK(b.size() == 3);

    auto d5 = default_partitions(5, 1);
    CHECK(d5.ground == 60);
    CHECK(d5.p.size() == 20);
    CHECK(d5.q.size() == 12);
    CHECK(d5.r.size() == 15);

    auto d4 = default_partitions(4, 1);
    CHECK(d4.ground == 24);
    CHECK(d4.p.size() == 12);
    CHECK(d4.q.size() == 6);
    CHECK(d4.r.size() == 8);

    CHECK_THROWS_AS(default_partitions(3, 1), input_error);
    TriplePartition bad = remark_partitions();
    bad.p[0] = {1, 1};
    CHECK_THROWS_AS(validate_triple_partition(bad), input_error);
}

TEST_CASE("remark instance: 48 vertices, 4-regular, lambda_min = alpha1") {
    auto rep = build_gk_wn(4, remark_partitions());
    CHECK(rep.graph.vertex_count() == 48);
    CHECK(rep.hoffman.fat_vertices().size() == 17);
    CHECK(is_regular(rep.graph) == std::optional<int>(4));
    CHECK(is_connected(rep.graph));
    CHECK(std::abs(rep.lambda_min - kAlpha1) < 1e-9);
    CHECK(rep.all_passed());
}

TEST_CASE("wn family small sweep stays above alpha1") {
    for (int k = 4; k <= 7; ++k) {
        auto rep = build_gk_wn(k, 1);
        CAPTURE(k);
        CHECK(rep.graph.vertex_count() == 4 * k * (k - 1) * (k - 2));
        CHECK(is_regular(rep.graph) == std::optional<int>(k));
        CHECK(is_connected(rep.graph));
        CHECK(rep.lambda_min >= kAlpha1 - 1e-9);
        CHECK(rep.all_passed());
    }
}

TEST_CASE("threshold scan") {
    int n_star = compute_threshold_N(1e-9);
    CHECK(n_star == 23); // pinned after first computation
    // defining property and minimality
    auto hwn = catalog(CatalogName::HWN);
    CHECK(lambda_min(clique_extension(hwn, n_star - 3), 1e-12) < kAlpha0 - 1e-9);
    CHECK(lambda_min(clique_extension(hwn, n_star - 4), 1e-12) >= kAlpha0 - 1e-9);
}

TEST_CASE("limit sequences decrease toward their limits") {
    auto seq9 = limit_sequence(CatalogName::H9, 10);
    REQUIRE(seq9.size() == 10);
    for (std::size_t i = 1; i < seq9.size(); ++i) {
        CHECK(seq9[i].lambda <= seq9[i - 1].lambda + 1e-9);
        CHECK(seq9[i].min_valency >= seq9[i - 1].min_valency);
    }
    CHECK(seq9.back().lambda >= kAlpha0 - 1e-9);
    CHECK(seq9.back().min_valency > seq9.front().min_valency);

    auto seqw = limit_sequence(CatalogName::HWN, 10);
    for (std::size_t i = 1; i < seqw.size(); ++i)
        CHECK(seqw[i].lambda <= seqw[i - 1].lambda + 1e-9);
    CHECK(seqw.back().lambda >= kAlpha1 - 1e-9);

    CHECK_THROWS_AS(limit_sequence(CatalogName::H2, 10), input_error);
    CHECK_THROWS_AS(limit_sequence(CatalogName::H9, 1), input_error);
}
