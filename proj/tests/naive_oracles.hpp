#pragma once

// Independent brute-force oracles for the exact solvers. Everything here is
// deliberately unoptimised: full assignment enumeration, no pruning, no
// symmetry breaking, no caching. Test-only.

#include <optional>
#include <set>
#include <vector>

#include "renlib/graph.hpp"

namespace naive {

using renlib::Graph;

inline bool assignment_ok(const Graph& g, const std::vector<int>& colour, int k,
                          bool rainbow_everywhere) {
    std::set<int> used(colour.begin(), colour.end());
    if (static_cast<int>(used.size()) != k) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && colour[u] == colour[v]) return false;
    for (int v = 0; v < g.n; ++v) {
        if (!rainbow_everywhere && g.degree(v) < 2) continue;
        std::set<int> seen;
        seen.insert(colour[v]);
        for (int u : g.neighbours(v)) seen.insert(colour[u]);
        if (static_cast<int>(seen.size()) != k) return false;
    }
    return true;
}

template <class Fn>
inline bool any_assignment(const Graph& g, int k, Fn&& ok) {
    std::vector<int> colour(static_cast<std::size_t>(g.n), 1);
    while (true) {
        if (ok(colour)) return true;
        int i = 0;
        while (i < g.n && colour[static_cast<std::size_t>(i)] == k) {
            colour[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == g.n) return false;
        ++colour[static_cast<std::size_t>(i)];
    }
}

inline bool j_colourable_with_k(const Graph& g, int k, bool rainbow_everywhere = true) {
    return any_assignment(g, k,
                          [&](const std::vector<int>& c) { return assignment_ok(g, c, k, rainbow_everywhere); });
}

inline std::optional<int> j_number(const Graph& g, bool rainbow_everywhere = true) {
    for (int k = g.n; k >= 1; --k)
        if (j_colourable_with_k(g, k, rainbow_everywhere)) return k;
    return std::nullopt;
}

inline bool j_colourable(const Graph& g) {
    for (int k = 1; k <= g.n; ++k)
        if (j_colourable_with_k(g, k)) return true;
    return false;
}

inline int chromatic_number(const Graph& g) {
    for (int k = 1;; ++k) {
        bool found = any_assignment(g, k, [&](const std::vector<int>& c) {
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v)
                    if (g.has_edge(u, v) && c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)])
                        return false;
            return true;
        });
        if (found) return k;
    }
}

struct RenAnswer {
    int ren = 0;
    std::vector<int> removed;
};

/// Subset scan in lexicographic order with the naive J-checker.
inline RenAnswer ren(const Graph& g) {
    for (int k = 0; k < g.n; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t keep = g.vertex_mask();
            for (int v : comb) keep &= ~Graph::bit(v);
            if (j_colourable(renlib::induced_by_mask(g, keep))) return {k, comb};
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == g.n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {g.n, {}};  // unreachable for n >= 1
}

}  // namespace naive
