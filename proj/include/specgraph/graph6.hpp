#pragma once

#include <cstddef>
#include <string>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// graph6 text encoding. Short form for n <= 62, the '~'-prefixed long form up
// to n = 258047. Edge bits are the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups, each + 63.

inline std::string graph6_encode(const SimpleGraph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw capacity_error("graph6_encode: order above 258047 not supported");
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline SimpleGraph graph6_decode(const std::string& text) {
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size()) throw parse_error("graph6: truncated input", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range 63..126", i);
        return c - 63;
    };
    long long n;
    if (byte(0) != 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6: '~~' long form not supported", 1);
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    SimpleGraph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != pos + need)
        throw parse_error("graph6: expected " + std::to_string(pos + need) + " bytes, got " +
                              std::to_string(text.size()),
                          text.size() < pos + need ? text.size() : pos + need);
    long long bit = 0, row = 0, col = 1;
    for (std::size_t i = 0; i < need; ++i) {
        int v = byte(pos + i);
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if (v & (1 << b)) g.add_edge(static_cast<int>(row), static_cast<int>(col));
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

} // namespace specgraph
