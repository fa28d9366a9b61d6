#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/polynomial.hpp"

namespace oracles {

using specgraph::BigInt;
using specgraph::IntPolynomial;
using specgraph::SimpleGraph;

/// Isomorphism by trying all vertex permutations.
inline bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Characteristic polynomial of xI - A by Leibniz expansion over permutations
/// (exact, for n <= 8). Entries of A are integers.
inline IntPolynomial brute_char_poly(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    IntPolynomial total;
    do {
        int sign = 1;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        IntPolynomial term{sign};
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<std::size_t>(i)];
            IntPolynomial entry =
                (i == j) ? IntPolynomial{-a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1}
                         : IntPolynomial{-a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
            term = term * entry;
            if (term.is_zero()) break;
        }
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Krausz-partition existence by enumerating all partitions of the edge set
/// (restricted growth strings) and validating the definition directly.
/// Exponential; use only for graphs with at most ~10 edges.
inline bool brute_line_graph(const SimpleGraph& g) {
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return true;
    std::vector<int> group(static_cast<std::size_t>(m), 0);

    auto valid = [&](int groups) {
        for (int c = 0; c < groups; ++c) {
            std::set<int> verts;
            int count = 0;
            for (int e = 0; e < m; ++e)
                if (group[static_cast<std::size_t>(e)] == c) {
                    verts.insert(edges[static_cast<std::size_t>(e)].first);
                    verts.insert(edges[static_cast<std::size_t>(e)].second);
                    ++count;
                }
            const int k = static_cast<int>(verts.size());
            if (count != k * (k - 1) / 2) return false; // group must be a full clique
        }
        std::vector<std::set<int>> in_groups(static_cast<std::size_t>(g.vertex_count()));
        for (int e = 0; e < m; ++e) {
            in_groups[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)].insert(
                group[static_cast<std::size_t>(e)]);
            in_groups[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)].insert(
                group[static_cast<std::size_t>(e)]);
        }
        for (const auto& s : in_groups)
            if (s.size() > 2) return false;
        return true;
    };

    std::function<bool(int, int)> rec = [&](int e, int used) -> bool {
        if (e == m) return valid(used);
        for (int c = 0; c <= used && c < m; ++c) {
            group[static_cast<std::size_t>(e)] = c;
            if (rec(e + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    return rec(1, 1); // edge 0 pinned to group 0
}

/// Erdos-Renyi random graph from a caller-owned seeded stream.
inline SimpleGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace oracles
