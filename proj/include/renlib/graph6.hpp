#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "renlib/graph.hpp"

namespace renlib {

/// Parse failure in a graph6 line; `offset` is the byte the decoder choked on.
struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t at)
        : std::runtime_error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// graph6: an order header N(n) followed by the upper triangle of the
// adjacency matrix in column-major order ((0,1),(0,2),(1,2),(0,3),...),
// packed big-endian 6 bits per byte, each byte offset by 63. The short
// header is a single byte for n <= 62, the long header is 126 followed by
// 18 bits, and the very long header is 126 126 followed by 36 bits.

inline Graph parse_graph6(std::string_view text) {
    auto byte_at = [&](std::size_t i) -> int { return static_cast<unsigned char>(text[i]); };

    if (text.empty()) throw Graph6Error("empty graph6 string", 0);

    long long n = 0;
    std::size_t pos = 0;
    int b0 = byte_at(0);
    if (b0 < 63 || b0 > 126) throw Graph6Error("header byte outside 63..126", 0);
    if (b0 < 126) {
        n = b0 - 63;
        pos = 1;
    } else {
        bool huge = text.size() >= 2 && byte_at(1) == 126;
        std::size_t first = huge ? 2 : 1;
        std::size_t count = huge ? 6 : 3;
        if (text.size() < first + count) throw Graph6Error("truncated order header", text.size());
        for (std::size_t i = first; i < first + count; ++i) {
            int b = byte_at(i);
            if (b < 63 || b > 126) throw Graph6Error("order byte outside 63..126", i);
            n = (n << 6) | (b - 63);
        }
        pos = first + count;
    }

    if (n > Graph::max_order)
        throw Graph6Error("order " + std::to_string(n) + " above supported maximum " +
                              std::to_string(Graph::max_order),
                          0);

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < pos + nchars) throw Graph6Error("truncated edge bits", text.size());
    if (text.size() > pos + nchars) throw Graph6Error("trailing data after edge bits", pos + nchars);

    int u = 0, v = 1;
    long long consumed = 0;
    for (std::size_t ci = 0; ci < nchars; ++ci) {
        int b = byte_at(pos + ci);
        if (b < 63 || b > 126) throw Graph6Error("edge byte outside 63..126", pos + ci);
        int bits = b - 63;
        for (int shift = 5; shift >= 0; --shift) {
            if (consumed < nbits) {
                if ((bits >> shift) & 1) g.add_edge(u, v);
                ++consumed;
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if ((bits >> shift) & 1) {
                throw Graph6Error("nonzero padding bits", pos + ci);
            }
        }
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

}  // namespace renlib
