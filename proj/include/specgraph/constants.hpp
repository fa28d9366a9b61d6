#pragma once

#include <string>

#include "specgraph/errors.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

enum class ConstantName { alpha0, alpha1, beta };

/// Named algebraic constant: minimal polynomial plus an isolated numeric value.
struct AlgebraicConstant {
    ConstantName name;
    IntPolynomial minimal_poly;
    double value;
};

/// alpha0 = -1-sqrt(2); alpha1 = smallest root of x^3+2x^2-2x-2 (~ -2.4812);
/// beta = smallest root of x^6-3x^5-7x^4+21x^3+13x^2-35x-4 (~ -2.0391).
inline IntPolynomial minimal_polynomial(ConstantName name) {
    switch (name) {
    case ConstantName::alpha0: return IntPolynomial{-1, 2, 1};
    case ConstantName::alpha1: return IntPolynomial{-2, -2, 2, 1};
    case ConstantName::beta: return IntPolynomial{-4, -35, 13, 21, -7, -3, 1};
    }
    throw input_error("unknown constant");
}

inline AlgebraicConstant constant(ConstantName name, double precision = 1e-12) {
    AlgebraicConstant c;
    c.name = name;
    c.minimal_poly = minimal_polynomial(name);
    c.value = min_root(c.minimal_poly, precision);
    return c;
}

inline ConstantName parse_constant_name(const std::string& s) {
    if (s == "ALPHA0" || s == "alpha0") return ConstantName::alpha0;
    if (s == "ALPHA1" || s == "alpha1") return ConstantName::alpha1;
    if (s == "BETA" || s == "beta") return ConstantName::beta;
    throw input_error("unknown constant name '" + s + "'");
}

inline std::string constant_name_string(ConstantName n) {
    switch (n) {
    case ConstantName::alpha0: return "ALPHA0";
    case ConstantName::alpha1: return "ALPHA1";
    case ConstantName::beta: return "BETA";
    }
    return {};
}

} // namespace specgraph
