#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specgraph/errors.hpp"

namespace specgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact integer coefficients, constant term first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) c_.emplace_back(c);
        normalize();
    }
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    const BigInt& coeff(int i) const {
        static const BigInt zero{0};
        return (i >= 0 && i <= degree()) ? c_[static_cast<std::size_t>(i)] : zero;
    }
    const BigInt& leading() const {
        if (is_zero()) throw input_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    BigRat eval(const BigRat& x) const {
        BigRat acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
        return IntPolynomial(std::move(d));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }
    IntPolynomial operator*(const BigInt& s) const {
        if (s == 0) return {};
        std::vector<BigInt> c(c_);
        for (auto& x : c) x *= s;
        return IntPolynomial(std::move(c));
    }
    IntPolynomial operator-() const { return *this * BigInt{-1}; }

    bool operator==(const IntPolynomial& other) const = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            if (a != 1 || i == 0) os << a.str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

namespace detail {

// Rational polynomial division: p = d*q + r with deg r < deg d.
inline std::pair<std::vector<BigRat>, std::vector<BigRat>> rat_divmod(std::vector<BigRat> p,
                                                                      const std::vector<BigRat>& d) {
    std::vector<BigRat> q(p.size() >= d.size() ? p.size() - d.size() + 1 : 0, BigRat{0});
    while (p.size() >= d.size() && !p.empty()) {
        BigRat f = p.back() / d.back();
        std::size_t shift = p.size() - d.size();
        q[shift] = f;
        for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= f * d[i];
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    return {std::move(q), std::move(p)};
}

inline std::vector<BigRat> to_rat(const IntPolynomial& p) {
    std::vector<BigRat> out;
    out.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return out;
}

inline int sgn(const BigRat& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
inline int sgn(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Primitive part with positive leading coefficient kept as given (sign matters
// for Sturm); divides out the integer content only.
inline IntPolynomial primitive(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g{0};
    for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
    if (g == 0 || g == 1) return p;
    std::vector<BigInt> out;
    for (const auto& c : p.coefficients()) out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

// Negated pseudo-remainder chain over the integers (content-reduced), i.e. the
// classic Sturm sequence up to positive scaling.
inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq;
    seq.push_back(primitive(p));
    IntPolynomial d = primitive(p.derivative());
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPolynomial& a = seq[seq.size() - 2];
        const IntPolynomial& b = seq.back();
        // pseudo-remainder with positive multiplier lead(b)^(deg a - deg b + 1)
        auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
        if (r.empty()) break;
        // clear denominators, flip sign
        BigInt denom_lcm{1};
        for (const auto& c : r)
            denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
        std::vector<BigInt> ri;
        for (const auto& c : r)
            ri.push_back(-BigInt(boost::multiprecision::numerator(c) *
                                 (denom_lcm / boost::multiprecision::denominator(c))));
        seq.push_back(primitive(IntPolynomial(std::move(ri))));
    }
    return seq;
}

inline int sign_changes_at(const std::vector<IntPolynomial>& seq, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& s : seq) {
        int sg = sgn(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

inline int sign_changes_at_minus_inf(const std::vector<IntPolynomial>& seq) {
    int changes = 0, prev = 0;
    for (const auto& s : seq) {
        int sg = sgn(s.leading());
        if (s.degree() % 2 == 1) sg = -sg;
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

} // namespace detail

/// True iff p = d*q exactly over the rationals.
inline bool poly_divides(const IntPolynomial& d, const IntPolynomial& p) {
    if (d.is_zero()) throw input_error("poly_divides: zero divisor");
    if (p.is_zero()) return true;
    if (p.degree() < d.degree()) return false;
    auto [q, r] = detail::rat_divmod(detail::to_rat(p), detail::to_rat(d));
    return r.empty();
}

/// Square-free part p / gcd(p, p').
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() <= 1) return p;
    // gcd via rational Euclid, then exact division
    std::vector<BigRat> a = detail::to_rat(p), b = detail::to_rat(p.derivative());
    while (!b.empty()) {
        auto [q, r] = detail::rat_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() <= 1) return p; // squarefree already
    auto [q, r] = detail::rat_divmod(detail::to_rat(p), a);
    BigInt denom_lcm{1};
    for (const auto& c : q)
        denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
    std::vector<BigInt> qi;
    for (const auto& c : q)
        qi.push_back(BigInt(boost::multiprecision::numerator(c) *
                            (denom_lcm / boost::multiprecision::denominator(c))));
    return detail::primitive(IntPolynomial(std::move(qi)));
}

/// Number of distinct real roots in (-inf, x].
inline int roots_below(const IntPolynomial& p, const BigRat& x) {
    IntPolynomial sf = squarefree_part(p);
    auto seq = detail::sturm_sequence(sf);
    return detail::sign_changes_at_minus_inf(seq) - detail::sign_changes_at(seq, x);
}

inline int real_root_count(const IntPolynomial& p) {
    IntPolynomial sf = squarefree_part(p);
    auto seq = detail::sturm_sequence(sf);
    int changes = 0, prev = 0;
    for (const auto& s : seq) { // at +inf
        int sg = detail::sgn(s.leading());
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return detail::sign_changes_at_minus_inf(seq) - changes;
}

/// Smallest real root, located by Sturm counts and refined by rational
/// bisection to the requested absolute precision.
inline double min_root(const IntPolynomial& p, double precision = 1e-12) {
    if (p.is_zero() || p.degree() < 1) throw input_error("min_root: constant polynomial");
    if (precision <= 0) throw input_error("min_root: precision must be positive");
    IntPolynomial sf = squarefree_part(p);
    auto seq = detail::sturm_sequence(sf);
    const int v_minus_inf = detail::sign_changes_at_minus_inf(seq);
    auto count_leq = [&](const BigRat& x) { return v_minus_inf - detail::sign_changes_at(seq, x); };
    // Cauchy bound on root magnitude
    BigInt lead = boost::multiprecision::abs(sf.leading());
    BigInt maxc{0};
    for (const auto& c : sf.coefficients()) maxc = std::max(maxc, BigInt(boost::multiprecision::abs(c)));
    BigRat bound = BigRat(maxc, lead) + 1;
    BigRat lo = -bound, hi = bound;
    if (count_leq(hi) == 0) throw input_error("min_root: polynomial has no real root");
    // invariant: count_leq(lo) == 0, count_leq(hi) >= 1
    BigRat prec{precision};
    while (hi - lo > prec) {
        BigRat mid = (lo + hi) / 2;
        if (sf.eval(mid) == 0) {
            // mid is itself a root; it is the smallest iff it is the only one <= mid
            if (count_leq(mid) == 1) return mid.convert_to<double>();
            hi = mid;
            continue;
        }
        if (count_leq(mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return (BigRat((lo + hi) / 2)).convert_to<double>();
}

} // namespace specgraph
