#pragma once

#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

using IntMatrix = std::vector<std::vector<long long>>;

inline constexpr int charpoly_default_limit = 64;

/// Exact characteristic polynomial det(xI - M) by the Samuelson-Berkowitz
/// division-free scheme, O(n^4) big-integer operations. Monic of degree n.
inline IntPolynomial char_poly(const IntMatrix& m, int max_n = charpoly_default_limit) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw input_error("char_poly: matrix not square");
    if (n > max_n)
        throw capacity_error("char_poly: dimension " + std::to_string(n) + " exceeds limit " +
                             std::to_string(max_n));
    // p holds coefficients in descending powers for the trailing principal
    // submatrix processed so far; start from the empty matrix.
    std::vector<BigInt> p{BigInt{1}};
    for (int j = n - 1; j >= 0; --j) {
        const int l = n - 1 - j; // size of current trailing submatrix B = M[j+1.., j+1..]
        // Toeplitz column: [1, -a, -R C, -R B C, -R B^2 C, ...]
        std::vector<BigInt> col(static_cast<std::size_t>(l) + 2);
        col[0] = 1;
        col[1] = -BigInt(m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
        std::vector<BigInt> w(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) w[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(j + 1 + i)][static_cast<std::size_t>(j)];
        for (int t = 0; t < l; ++t) {
            BigInt dot{0};
            for (int i = 0; i < l; ++i)
                dot += BigInt(m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + 1 + i)]) *
                       w[static_cast<std::size_t>(i)];
            col[static_cast<std::size_t>(t) + 2] = -dot;
            if (t + 1 < l) {
                std::vector<BigInt> w2(static_cast<std::size_t>(l), BigInt{0});
                for (int r = 0; r < l; ++r)
                    for (int i = 0; i < l; ++i)
                        w2[static_cast<std::size_t>(r)] +=
                            BigInt(m[static_cast<std::size_t>(j + 1 + r)][static_cast<std::size_t>(j + 1 + i)]) *
                            w[static_cast<std::size_t>(i)];
                w = std::move(w2);
            }
        }
        std::vector<BigInt> next(p.size() + 1, BigInt{0});
        for (std::size_t s = 0; s < next.size(); ++s)
            for (std::size_t t = 0; t < p.size(); ++t)
                if (s >= t && s - t < col.size()) next[s] += col[s - t] * p[t];
        p = std::move(next);
    }
    std::vector<BigInt> ascending(p.rbegin(), p.rend());
    return IntPolynomial(std::move(ascending));
}

} // namespace specgraph
