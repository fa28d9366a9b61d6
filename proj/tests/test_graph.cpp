#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specgraph/graph.hpp"

using namespace specgraph;

TEST_CASE("make_graph basics") {
    SECTION("empty graph") {
        auto g = make_graph(0, {});
        CHECK(g.vertex_count() == 0);
        CHECK(g.edge_count() == 0);
    }
    SECTION("paw") {
        auto g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
        std::vector<int> d = degrees(g);
        std::sort(d.begin(), d.end(), std::greater<>());
        CHECK(d == std::vector<int>{3, 2, 2, 1});
        CHECK(g == paw_graph());
    }
    SECTION("duplicate edges collapse") {
        auto g = make_graph(4, {{0, 1}, {1, 0}});
        CHECK(g.edge_count() == 1);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(make_graph(2, {{0, 2}}), input_error);
        CHECK_THROWS_AS(make_graph(2, {{1, 1}}), input_error);
    }
}

TEST_CASE("standard families") {
    CHECK(standard_graph("cycle", {4}).edge_count() == 4);
    CHECK_THROWS_AS(standard_graph("cycle", {2}), input_error);

    auto kp = standard_graph("cocktail", {3});
    CHECK(kp.vertex_count() == 6);
    CHECK(is_regular(kp) == std::optional<int>(4));

    auto k23 = standard_graph("complete_bipartite", {2, 3});
    std::vector<int> d = degrees(k23);
    std::sort(d.begin(), d.end(), std::greater<>());
    CHECK(d == std::vector<int>{3, 3, 2, 2, 2});

    CHECK_THROWS_AS(standard_graph("heptahedron", {1}), input_error);
    CHECK_THROWS_AS(standard_graph("cycle", {3, 3}), input_error);
}

TEST_CASE("cartesian product") {
    SECTION("K1 x G is G") {
        auto g = cycle_graph(5);
        auto p = cartesian_product(complete_graph(1), g);
        CHECK(p == g);
    }
    SECTION("C3 x K2 is the 3-regular prism") {
        auto p = cartesian_product(cycle_graph(3), complete_graph(2));
        CHECK(p.vertex_count() == 6);
        CHECK(is_regular(p) == std::optional<int>(3));
        CHECK(is_connected(p));
    }
    SECTION("empty factor rejected") {
        CHECK_THROWS_AS(cartesian_product(SimpleGraph(0), complete_graph(2)), input_error);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(complete_graph(4), {0, 1, 2}) == complete_graph(3));
    auto paw = paw_graph();
    auto sub = induced_subgraph(paw, {1, 2, 3});
    CHECK(sub.edge_count() == 1); // one edge plus isolated vertex
    CHECK(sub.adjacent(0, 1));
    auto c5 = cycle_graph(5);
    CHECK(induced_subgraph(c5, {0, 1, 2, 3, 4}) == c5);
    CHECK_THROWS_AS(induced_subgraph(c5, {0, 9}), input_error);
}

TEST_CASE("induced subgraphs preserve adjacency exactly") {
    std::mt19937 rng(6021);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) verts.push_back(v);
        std::shuffle(verts.begin(), verts.end(), rng);
        auto h = induced_subgraph(g, verts);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j)
                REQUIRE(h.adjacent(static_cast<int>(i), static_cast<int>(j)) ==
                        g.adjacent(verts[i], verts[j]));
    }
}

TEST_CASE("degree predicates") {
    auto c6 = cycle_graph(6);
    CHECK(is_regular(c6) == std::optional<int>(2));
    CHECK(is_connected(c6));
    CHECK(is_triangle_free(c6));

    CHECK(is_regular(complete_bipartite_graph(2, 3)) == std::nullopt);

    auto two_edges = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));

    // documented empty-graph conventions
    CHECK(is_connected(SimpleGraph(0)));
    CHECK(is_regular(SimpleGraph(0)) == std::optional<int>(0));
}

TEST_CASE("induced pattern search") {
    SECTION("claw in K_{1,3}") {
        auto found = find_induced(claw_graph(), PatternKind::three_claw);
        REQUIRE(found.has_value());
        CHECK((*found)[0] == 0); // center first
    }
    SECTION("C6 has no claw or diamond") {
        CHECK_FALSE(find_induced(cycle_graph(6), PatternKind::three_claw).has_value());
        CHECK_FALSE(find_induced(cycle_graph(6), PatternKind::diamond).has_value());
    }
    SECTION("diamond occurrences are induced") {
        // K4 contains diamonds as subgraphs but not induced
        CHECK_FALSE(find_induced(complete_graph(4), PatternKind::diamond).has_value());
        auto d = find_induced(diamond_graph(), PatternKind::diamond);
        REQUIRE(d.has_value());
    }
    SECTION("triangle") {
        CHECK(find_induced(paw_graph(), PatternKind::triangle).has_value());
        CHECK_FALSE(find_induced(claw_graph(), PatternKind::triangle).has_value());
    }
}

TEST_CASE("cocktail party recognition") {
    CHECK(is_cocktail_party(cocktail_party_graph(3)) == std::optional<int>(3));
    CHECK(is_cocktail_party(cycle_graph(4)) == std::optional<int>(2)); // C4 = K_{2x2}
    CHECK(is_cocktail_party(cycle_graph(5)) == std::nullopt);
    CHECK(is_cocktail_party(complete_graph(4)) == std::nullopt);
    CHECK(is_cocktail_party(cocktail_party_graph(5)) == std::optional<int>(5));
}
