#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "renlib/chromatic.hpp"
#include "renlib/colouring.hpp"
#include "renlib/graph.hpp"

namespace renlib {

enum class JMode {
    j,       // every vertex must see all k colours in its closed neighbourhood
    j_star,  // only internal vertices (degree >= 2) must
};

inline const char* jmode_name(JMode m) { return m == JMode::j ? "J" : "J*"; }

/// A colouring certificate: proper, all k colours used, and the closed
/// neighbourhood of every constrained vertex carries all k colours.
struct JWitness {
    int k = 0;
    JMode mode = JMode::j;
    Colouring colouring;
};

inline bool rainbow_required(const Graph& g, int v, JMode mode) {
    return mode == JMode::j || g.degree(v) >= 2;
}

/// Re-checks a witness from the definitions, independently of the solver.
inline bool witness_valid(const Graph& g, const JWitness& w) {
    if (w.colouring.k != w.k || static_cast<int>(w.colouring.colour.size()) != g.n) return false;
    if (w.k < 1) return false;
    std::set<int> used;
    for (int c : w.colouring.colour) {
        if (c < 1 || c > w.k) return false;
        used.insert(c);
    }
    if (static_cast<int>(used.size()) != w.k) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u))
            if (u < v && w.colouring.colour[static_cast<std::size_t>(u)] ==
                             w.colouring.colour[static_cast<std::size_t>(v)])
                return false;
    for (int v = 0; v < g.n; ++v) {
        if (!rainbow_required(g, v, w.mode)) continue;
        std::set<int> seen;
        seen.insert(w.colouring.colour[static_cast<std::size_t>(v)]);
        for (int u : g.neighbours(v)) seen.insert(w.colouring.colour[static_cast<std::size_t>(u)]);
        if (static_cast<int>(seen.size()) != w.k) return false;
    }
    return true;
}

namespace detail {

struct JSearch {
    const Graph& g;
    int k;
    JMode mode;
    std::vector<int> order;
    std::vector<int> colour;
    std::vector<std::uint64_t> seen;    // colours present in N[v]
    std::vector<std::uint64_t> forbid;  // colours on neighbours of v
    std::vector<int> free_slots;        // uncoloured vertices in N[v]
    std::vector<char> required;

    JSearch(const Graph& graph, int colours, JMode m)
        : g(graph),
          k(colours),
          mode(m),
          colour(static_cast<std::size_t>(graph.n), 0),
          seen(static_cast<std::size_t>(graph.n), 0),
          forbid(static_cast<std::size_t>(graph.n), 0),
          free_slots(static_cast<std::size_t>(graph.n)),
          required(static_cast<std::size_t>(graph.n)) {
        order.resize(static_cast<std::size_t>(graph.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int v = 0; v < g.n; ++v) {
            free_slots[static_cast<std::size_t>(v)] = g.degree(v) + 1;
            required[static_cast<std::size_t>(v)] = rainbow_required(g, v, mode) ? 1 : 0;
        }
    }

    bool dfs(int pos, int used) {
        if (pos == g.n) {
            if (used != k) return false;
            for (int v = 0; v < g.n; ++v)
                if (required[static_cast<std::size_t>(v)] &&
                    std::popcount(seen[static_cast<std::size_t>(v)]) != k)
                    return false;
            return true;
        }
        int v = order[static_cast<std::size_t>(pos)];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forbid[static_cast<std::size_t>(v)] >> (c - 1)) & 1) continue;
            int next_used = std::max(used, c);
            if (k - next_used > g.n - pos - 1) continue;  // not enough vertices left to open colours

            std::uint64_t cbit = std::uint64_t{1} << (c - 1);
            std::uint64_t closed = g.closed_neighbourhood(v);
            std::uint64_t seen_touched = 0, forbid_touched = 0;
            for (std::uint64_t m = closed; m; m &= m - 1) {
                int w = std::countr_zero(m);
                --free_slots[static_cast<std::size_t>(w)];
                if (!(seen[static_cast<std::size_t>(w)] & cbit)) {
                    seen[static_cast<std::size_t>(w)] |= cbit;
                    seen_touched |= Graph::bit(w);
                }
            }
            for (std::uint64_t m = g.neighbour_mask(v); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (!(forbid[static_cast<std::size_t>(w)] & cbit)) {
                    forbid[static_cast<std::size_t>(w)] |= cbit;
                    forbid_touched |= Graph::bit(w);
                }
            }
            colour[static_cast<std::size_t>(v)] = c;

            bool ok = true;
            for (std::uint64_t m = closed; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (required[static_cast<std::size_t>(w)] &&
                    std::popcount(seen[static_cast<std::size_t>(w)]) +
                            free_slots[static_cast<std::size_t>(w)] <
                        k) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(pos + 1, next_used)) return true;

            colour[static_cast<std::size_t>(v)] = 0;
            for (std::uint64_t m = closed; m; m &= m - 1)
                ++free_slots[static_cast<std::size_t>(std::countr_zero(m))];
            for (std::uint64_t m = seen_touched; m; m &= m - 1)
                seen[static_cast<std::size_t>(std::countr_zero(m))] &= ~cbit;
            for (std::uint64_t m = forbid_touched; m; m &= m - 1)
                forbid[static_cast<std::size_t>(std::countr_zero(m))] &= ~cbit;
        }
        return false;
    }
};

}  // namespace detail

/// Searches for a proper colouring with exactly k colours whose rainbow
/// condition holds at every constrained vertex. Returns the first witness in
/// (degree desc, index) vertex order with colours introduced in order.
inline std::optional<JWitness> j_colourable_with_k(const Graph& g, int k, JMode mode) {
    if (g.n < 1) throw std::invalid_argument("J-colouring needs at least one vertex");
    if (k < 1) throw std::invalid_argument("colour count must be positive");
    if (k > g.n) return std::nullopt;
    for (int v = 0; v < g.n; ++v)
        if (rainbow_required(g, v, mode) && g.degree(v) + 1 < k) return std::nullopt;
    detail::JSearch search(g, k, mode);
    if (!search.dfs(0, 0)) return std::nullopt;
    return JWitness{k, mode, Colouring{k, search.colour}};
}

namespace detail {

inline std::optional<JWitness> scan_down(const Graph& g, int ceiling, JMode mode) {
    int floor = chromatic_number(g);
    for (int k = std::min(ceiling, g.n); k >= floor; --k)
        if (auto w = j_colourable_with_k(g, k, mode)) return w;
    return std::nullopt;
}

}  // namespace detail

/// J(G) with its witness, or nothing when no colour count in
/// [chi(G), delta(G)+1] admits a J-colouring.
inline std::optional<JWitness> j_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("J-colouring needs at least one vertex");
    return detail::scan_down(g, g.min_degree() + 1, JMode::j);
}

/// J*(G): the rainbow condition is enforced only at internal vertices
/// (degree >= 2). The scan ceiling is 1 + the minimum internal degree, or
/// Delta(G)+1 when there is no internal vertex.
inline std::optional<JWitness> j_star_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("J-colouring needs at least one vertex");
    int min_internal = -1;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2 && (min_internal < 0 || g.degree(v) < min_internal))
            min_internal = g.degree(v);
    int ceiling = min_internal < 0 ? g.max_degree() + 1 : min_internal + 1;
    return detail::scan_down(g, ceiling, JMode::j_star);
}

inline bool j_colourable(const Graph& g) { return j_number(g).has_value(); }

}  // namespace renlib
