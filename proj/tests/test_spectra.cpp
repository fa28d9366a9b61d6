#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/polynomial.hpp"

using namespace specgraph;

namespace {
constexpr double kAlpha0 = -2.414213562373095048802; // -1-sqrt(2)
}

TEST_CASE("lambda_min on known spectra") {
    CHECK(lambda_min(path_graph(3), 1e-12) == Catch::Approx(-std::sqrt(2.0)).margin(1e-11));
    CHECK(lambda_min(claw_graph(), 1e-12) == Catch::Approx(-std::sqrt(3.0)).margin(1e-11));
    // pentagon x complete graph: (-3-sqrt(5))/2 for every m >= 2
    for (int m = 2; m <= 4; ++m) {
        auto g = cartesian_product(cycle_graph(5), complete_graph(m));
        CHECK(lambda_min(g, 1e-12) == Catch::Approx(-2.618033988749895).margin(1e-10));
    }
    auto prism = cartesian_product(cycle_graph(3), complete_graph(2));
    CHECK(lambda_min(prism, 1e-12) == Catch::Approx(-2.0).margin(1e-11));
}

TEST_CASE("lambda_min input checking") {
    SymMatrix m(2);
    m.at(0, 1) = 1.0; // not symmetric
    CHECK_THROWS_AS(lambda_min(m), input_error);
    CHECK_THROWS_AS(lambda_min(SymMatrix(0)), input_error);
    CHECK_THROWS_AS(lambda_min(adjacency_matrix(complete_graph(2)), 0.0), input_error);
}

TEST_CASE("spectrum on known graphs") {
    auto s4 = spectrum(complete_graph(4), 1e-12);
    REQUIRE(s4.size() == 4);
    CHECK(s4[0] == Catch::Approx(-1.0).margin(1e-10));
    CHECK(s4[1] == Catch::Approx(-1.0).margin(1e-10));
    CHECK(s4[2] == Catch::Approx(-1.0).margin(1e-10));
    CHECK(s4[3] == Catch::Approx(3.0).margin(1e-10));

    auto c4 = spectrum(cycle_graph(4), 1e-12);
    CHECK(c4[0] == Catch::Approx(-2.0).margin(1e-10));
    CHECK(c4[1] == Catch::Approx(0.0).margin(1e-10));
    CHECK(c4[2] == Catch::Approx(0.0).margin(1e-10));
    CHECK(c4[3] == Catch::Approx(2.0).margin(1e-10));

    // smallest eigenvalue of the paw solves x^3 - x^2 - 3x + 1 = 0
    auto paw = spectrum(paw_graph(), 1e-12);
    CHECK(paw.front() == Catch::Approx(min_root(IntPolynomial{1, -3, -1, 1}, 1e-13)).margin(1e-10));
}

TEST_CASE("numeric and exact spectral paths agree") {
    std::mt19937 rng(773311);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        auto g = oracles::random_graph(rng, n, 0.5);
        auto p = char_poly(adjacency_int_matrix(g));
        auto eigs = spectrum(g, 1e-11);
        // scaled residual of the exact polynomial at each numeric eigenvalue
        double norm = 0;
        for (const auto& c : p.coefficients()) norm += std::abs(c.convert_to<double>());
        for (double x : eigs) CHECK(std::abs(p.eval(x)) / norm < 1e-6);
        // trace check
        double sum = std::accumulate(eigs.begin(), eigs.end(), 0.0);
        CHECK(std::abs(sum) < n * 1e-9);
        // lambda_min equals the smallest root of the characteristic polynomial
        CHECK(lambda_min(g, 1e-12) == Catch::Approx(min_root(p, 1e-13)).margin(1e-9));
    }
}

TEST_CASE("spectrum handles large multiplicities") {
    // K_{m x 2} has eigenvalues 2m-2, 0 (x m), -2 (x m-1)
    for (int m : {3, 5, 8}) {
        auto s = spectrum(cocktail_party_graph(m), 1e-11);
        REQUIRE(static_cast<int>(s.size()) == 2 * m);
        for (int i = 0; i < m - 1; ++i) CHECK(s[static_cast<std::size_t>(i)] == Catch::Approx(-2.0).margin(1e-9));
        for (int i = m - 1; i < 2 * m - 1; ++i)
            CHECK(s[static_cast<std::size_t>(i)] == Catch::Approx(0.0).margin(1e-9));
        CHECK(s.back() == Catch::Approx(2.0 * m - 2.0).margin(1e-9));
    }
}

TEST_CASE("Sturm root counts agree with numeric eigenvalue counts") {
    std::mt19937 rng(181818);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        IntMatrix m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
        SymMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long long v = static_cast<long long>(rng() % 7) - 3;
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
                s.at(i, j) = static_cast<double>(v);
                s.at(j, i) = static_cast<double>(v);
            }
        auto p = char_poly(m);
        auto eigs = spectrum(s, 1e-11);
        for (int probe = -9; probe <= 9; probe += 3) {
            // half-integer probes cannot collide with eigenvalues of an
            // integer matrix whose char poly is monic
            BigRat q(2 * probe + 1, 2);
            double qd = static_cast<double>(2 * probe + 1) / 2.0;
            int numeric = 0;
            for (double x : eigs)
                if (x <= qd) ++numeric;
            CHECK(roots_below(p, q) == numeric);
        }
    }
}

TEST_CASE("interlacing holds for random induced subgraphs") {
    std::mt19937 rng(90210);
    int done = 0;
    while (done < 500) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = oracles::random_graph(rng, n, 0.5);
        if (g.vertex_count() < 2) continue;
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 0);
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(k));
        auto h = induced_subgraph(g, verts);
        if (h.vertex_count() == 0) continue;
        CHECK(lambda_min(h, 1e-11) >= lambda_min(g, 1e-11) - 1e-9);
        ++done;
    }
}

TEST_CASE("spectral report carries the requested fields") {
    auto r = spectral_report(complete_graph(4), 1e-10, true, true);
    CHECK(r.lambda_min == Catch::Approx(-1.0).margin(1e-9));
    REQUIRE(r.spectrum.has_value());
    REQUIRE(r.char_poly.has_value());
    CHECK(r.char_poly->degree() == 4);
    CHECK(r.spectrum->size() == 4);
}
