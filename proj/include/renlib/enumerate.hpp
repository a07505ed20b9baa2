#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "renlib/graph.hpp"

namespace renlib {

/// Isomorphism is decided by a full permutation scan; anything larger wants a
/// real canonical-labelling library, which is out of scope here.
inline constexpr int canonical_max_order = 9;

namespace detail {

/// Upper-triangle bits in column-major order, the first pair in the most
/// significant position, after relabelling by `perm` (perm[new] = old).
inline std::uint64_t triangle_key(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            key = (key << 1) |
                  (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]) ? 1u : 0u);
    return key;
}

}  // namespace detail

/// Minimal triangle key over all vertex relabellings. Equal keys on equal
/// orders characterise isomorphism.
inline std::uint64_t canonical_key(const Graph& g) {
    if (g.n > canonical_max_order)
        throw GuardError("canonical form is guarded to order <= " + std::to_string(canonical_max_order) +
                         ", got " + std::to_string(g.n));
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, detail::triangle_key(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::string key_to_bits(std::uint64_t key, int n) {
    int m = n * (n - 1) / 2;
    std::string s(static_cast<std::size_t>(m), '0');
    for (int p = 0; p < m; ++p)
        if ((key >> (m - 1 - p)) & 1) s[static_cast<std::size_t>(p)] = '1';
    return s;
}

/// Canonical form as a '0'/'1' string over the column-major upper triangle.
inline std::string canonical_form(const Graph& g) { return key_to_bits(canonical_key(g), g.n); }

inline Graph graph_from_bits(int n, std::string_view bits) {
    if (static_cast<long long>(bits.size()) != static_cast<long long>(n) * (n - 1) / 2)
        throw std::invalid_argument("bit string length does not match order");
    Graph g(n);
    std::size_t p = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++p) {
            if (bits[p] == '1') g.add_edge(u, v);
            else if (bits[p] != '0') throw std::invalid_argument("bit string must be over {0,1}");
        }
    return g;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.n == b.n && canonical_key(a) == canonical_key(b);
}

namespace detail {

inline Graph graph_from_key(int n, std::uint64_t key) {
    int m = n * (n - 1) / 2;
    Graph g(n);
    int p = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++p)
            if ((key >> (m - 1 - p)) & 1) g.add_edge(u, v);
    return g;
}

inline const std::vector<Graph>& all_representatives(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::set<std::uint64_t> keys;
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        keys.insert(canonical_key(graph_from_key(n, mask)));

    std::vector<Graph> reps;
    reps.reserve(keys.size());
    for (std::uint64_t key : keys) reps.push_back(graph_from_key(n, key));
    return cache.emplace(n, std::move(reps)).first->second;
}

}  // namespace detail

/// One representative per isomorphism class of order n, in strictly
/// increasing canonical-form order. Built-in limit n <= 6; larger orders are
/// expected to arrive as external graph6 files.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > 6)
        throw GuardError("enumeration is guarded to orders 1..6, got " + std::to_string(n));
    std::vector<Graph> out;
    for (const Graph& g : detail::all_representatives(n))
        if (!connected_only || g.connected()) out.push_back(g);
    return out;
}

}  // namespace renlib
