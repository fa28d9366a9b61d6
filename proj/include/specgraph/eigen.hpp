#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "specgraph/charpoly.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

/// Dense symmetric matrix, row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

inline SymMatrix adjacency_matrix(const SimpleGraph& g) {
    SymMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) m.at(u, v) = 1.0;
    return m;
}

inline IntMatrix adjacency_int_matrix(const SimpleGraph& g) {
    IntMatrix m(static_cast<std::size_t>(g.vertex_count()),
                std::vector<long long>(static_cast<std::size_t>(g.vertex_count()), 0));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    return m;
}

namespace detail {

inline void check_symmetric(const SymMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw input_error("matrix is not symmetric");
}

/// Householder reduction to tridiagonal form; returns diagonal d and
/// subdiagonal e (e[0] unused). Destroys its working copy only.
inline void tridiagonalize(const SymMatrix& m, std::vector<double>& d, std::vector<double>& e) {
    const int n = m.n;
    d.assign(static_cast<std::size_t>(n), 0.0);
    e.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return;
    std::vector<double> a = m.a;
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };
    for (int i = n - 1; i >= 1; --i) {
        double scale = 0.0, h = 0.0;
        const int l = i - 1;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[static_cast<std::size_t>(i)] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<std::size_t>(i)] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[static_cast<std::size_t>(j)] = g / h;
                    f += e[static_cast<std::size_t>(j)] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[static_cast<std::size_t>(j)] = g = e[static_cast<std::size_t>(j)] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        at(j, k) -= f * e[static_cast<std::size_t>(k)] + g * at(i, k);
                }
            }
        } else {
            e[static_cast<std::size_t>(i)] = at(i, l);
        }
        d[static_cast<std::size_t>(i)] = h;
    }
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = at(i, i);
}

/// Sturm count: number of eigenvalues of the tridiagonal (d, e) strictly below x.
inline int eigen_count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = 1.0;
    const double tiny = 1e-290; // keeps e^2/q finite for all matrices in range
    for (int i = 0; i < n; ++i) {
        double sub = 0.0;
        if (i > 0) {
            double ei = e[static_cast<std::size_t>(i)];
            sub = ei * ei / q;
        }
        q = d[static_cast<std::size_t>(i)] - x - sub;
        if (q > -tiny && q < tiny) q = q <= 0.0 ? -tiny : tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

struct Tridiagonal {
    std::vector<double> d, e;
    double lo, hi; // Gershgorin bounds
};

inline Tridiagonal reduce(const SymMatrix& m) {
    check_symmetric(m);
    Tridiagonal t;
    tridiagonalize(m, t.d, t.e);
    t.lo = 0.0;
    t.hi = 0.0;
    const int n = m.n;
    for (int i = 0; i < n; ++i) {
        double r = std::fabs(i > 0 ? t.e[static_cast<std::size_t>(i)] : 0.0) +
                   std::fabs(i + 1 < n ? t.e[static_cast<std::size_t>(i + 1)] : 0.0);
        t.lo = std::min(t.lo, t.d[static_cast<std::size_t>(i)] - r);
        t.hi = std::max(t.hi, t.d[static_cast<std::size_t>(i)] + r);
    }
    t.lo -= 1.0;
    t.hi += 1.0;
    return t;
}

/// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
inline double kth_eigenvalue(const Tridiagonal& t, int k, double tol) {
    double lo = t.lo, hi = t.hi;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (eigen_count_below(t.d, t.e, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

/// Smallest eigenvalue within absolute error tol, via Householder
/// tridiagonalization and Sturm-count bisection.
inline double lambda_min(const SymMatrix& m, double tol = 1e-9) {
    if (tol <= 0) throw input_error("lambda_min: tol must be positive");
    if (m.n == 0) throw input_error("lambda_min: empty matrix");
    auto t = detail::reduce(m);
    return detail::kth_eigenvalue(t, 0, tol * 0.5);
}

inline double lambda_min(const SimpleGraph& g, double tol = 1e-9) {
    return lambda_min(adjacency_matrix(g), tol);
}

/// All eigenvalues with multiplicity, sorted ascending.
inline std::vector<double> spectrum(const SymMatrix& m, double tol = 1e-9) {
    if (tol <= 0) throw input_error("spectrum: tol must be positive");
    auto t = detail::reduce(m);
    std::vector<double> out(static_cast<std::size_t>(m.n));
    for (int k = 0; k < m.n; ++k) out[static_cast<std::size_t>(k)] = detail::kth_eigenvalue(t, k, tol * 0.5);
    return out;
}

inline std::vector<double> spectrum(const SimpleGraph& g, double tol = 1e-9) {
    return spectrum(adjacency_matrix(g), tol);
}

/// Numeric-first spectral summary with optional exact certificate.
struct SpectralReport {
    double lambda_min = 0.0;
    double tolerance = 0.0;
    std::optional<std::vector<double>> spectrum;
    std::optional<IntPolynomial> char_poly;
};

inline SpectralReport spectral_report(const SimpleGraph& g, double tol = 1e-9, bool with_spectrum = false,
                                      bool exact = false) {
    SpectralReport r;
    r.tolerance = tol;
    r.lambda_min = lambda_min(g, tol);
    if (with_spectrum) r.spectrum = spectrum(g, tol);
    if (exact) r.char_poly = char_poly(adjacency_int_matrix(g));
    return r;
}

} // namespace specgraph
