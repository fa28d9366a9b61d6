#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/constants.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/polynomial.hpp"

using namespace specgraph;

TEST_CASE("polynomial arithmetic and printing") {
    IntPolynomial p{-1, 0, 1}; // x^2 - 1
    IntPolynomial d{1, 1};     // x + 1
    CHECK(p.degree() == 2);
    CHECK((d * IntPolynomial{-1, 1}) == p);
    CHECK(p.str() == "x^2 - 1");
    CHECK(IntPolynomial{}.str() == "0");
    CHECK(IntPolynomial{0, 0, 0}.degree() == -1);
    CHECK(p.eval(BigRat(3)) == BigRat(8));
}

TEST_CASE("poly_divides") {
    CHECK(poly_divides(IntPolynomial{1, 1}, IntPolynomial{-1, 0, 1}));
    CHECK_FALSE(poly_divides(IntPolynomial{-2, -2, 2, 1}, IntPolynomial{-1, -2, 2, 1}));
    CHECK(poly_divides(IntPolynomial{2, 4}, IntPolynomial{1, 2})); // rational quotient 1/2
    CHECK_THROWS_AS(poly_divides(IntPolynomial{}, IntPolynomial{1, 1}), input_error);
    // the H8 certificate shape: x^2+2x-1 divides (x+1)(x^2+2x-1)
    auto prod = IntPolynomial{1, 1} * IntPolynomial{-1, 2, 1};
    CHECK(poly_divides(IntPolynomial{-1, 2, 1}, prod));
}

TEST_CASE("min_root on the named polynomials") {
    // x^2 + 2x - 1 -> -1-sqrt(2)
    CHECK(min_root(IntPolynomial{-1, 2, 1}, 1e-13) ==
          Catch::Approx(-2.414213562373095).epsilon(0).margin(1e-12));
    // x^3 + 2x^2 - 2x - 2 -> alpha1
    CHECK(min_root(IntPolynomial{-2, -2, 2, 1}, 1e-13) ==
          Catch::Approx(-2.481194304092016).epsilon(0).margin(1e-12));
    // the degree-6 polynomial -> beta
    CHECK(min_root(IntPolynomial{-4, -35, 13, 21, -7, -3, 1}, 1e-13) ==
          Catch::Approx(-2.039135900324916).epsilon(0).margin(1e-12));
    // rational root
    CHECK(min_root(IntPolynomial{2, 1}, 1e-13) == Catch::Approx(-2.0).margin(1e-12));
    // repeated roots
    auto sq = IntPolynomial{-1, 2, 1} * IntPolynomial{-1, 2, 1};
    CHECK(min_root(sq, 1e-13) == Catch::Approx(-2.414213562373095).margin(1e-12));
    CHECK_THROWS_AS(min_root(IntPolynomial{1, 0, 1}, 1e-12), input_error); // no real root
    CHECK_THROWS_AS(min_root(IntPolynomial{5}, 1e-12), input_error);
}

TEST_CASE("min_root consistency (sign change bracket)") {
    std::vector<IntPolynomial> polys = {
        {-1, 2, 1}, {-2, -2, 2, 1}, {-4, -35, 13, 21, -7, -3, 1}, {-3, 0, 1}, {1, -3, 0, 1}};
    for (const auto& p : polys) {
        double r = min_root(p, 1e-12);
        double lo = p.eval(r - 1e-6), hi = p.eval(r + 1e-6);
        bool bracket = (lo <= 0 && hi >= 0) || (lo >= 0 && hi <= 0);
        CHECK(bracket);
    }
}

TEST_CASE("real root counting") {
    CHECK(real_root_count(IntPolynomial{-1, 2, 1}) == 2);
    CHECK(real_root_count(IntPolynomial{1, 0, 1}) == 0);
    CHECK(real_root_count(IntPolynomial{-4, -35, 13, 21, -7, -3, 1}) == 6);
    CHECK(roots_below(IntPolynomial{-1, 0, 1}, BigRat(0)) == 1);     // roots +-1
    CHECK(roots_below(IntPolynomial{-1, 0, 1}, BigRat(1)) == 2);     // (-inf, 1] includes 1
    CHECK(roots_below(IntPolynomial{-1, 0, 1}, BigRat(-2)) == 0);
}

TEST_CASE("char_poly fixed values") {
    CHECK(char_poly(adjacency_int_matrix(complete_graph(2))) == IntPolynomial{-1, 0, 1});
    CHECK(char_poly(adjacency_int_matrix(complete_graph(3))) == IntPolynomial{-2, -3, 0, 1});
    // paw: (x+1)(x^3-x^2-3x+1) = x^4 - 4x^2 - 2x + 1, checked against the
    // Leibniz-expansion oracle as well
    auto mp = adjacency_int_matrix(paw_graph());
    auto p = char_poly(mp);
    CHECK(p == IntPolynomial{1, -2, -4, 0, 1});
    CHECK(p == oracles::brute_char_poly(mp));
    CHECK(p == IntPolynomial{1, 1} * IntPolynomial{1, -3, -1, 1});
}

TEST_CASE("char_poly matches the Leibniz oracle on random matrices") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        IntMatrix m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long long v = static_cast<long long>(rng() % 7) - 3;
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
            }
        CHECK(char_poly(m) == oracles::brute_char_poly(m));
    }
}

TEST_CASE("char_poly errors") {
    CHECK_THROWS_AS(char_poly(IntMatrix{{0, 1}}), input_error);
    IntMatrix big(65, std::vector<long long>(65, 0));
    CHECK_THROWS_AS(char_poly(big), capacity_error);
}

TEST_CASE("algebraic constants") {
    auto a0 = constant(ConstantName::alpha0);
    CHECK(a0.value == Catch::Approx(-2.414213562373095).margin(1e-12));
    CHECK(a0.minimal_poly == IntPolynomial{-1, 2, 1});
    auto a1 = constant(ConstantName::alpha1);
    CHECK(a1.value == Catch::Approx(-2.4811943040920156).margin(1e-11));
    auto b = constant(ConstantName::beta);
    CHECK(b.value == Catch::Approx(-2.0391359003249164).margin(1e-11));
    // minimal polynomial nearly vanishes at the reported value
    CHECK(std::abs(b.minimal_poly.eval(b.value)) < 1e-9);
    CHECK_THROWS_AS(parse_constant_name("GAMMA"), input_error);
}
