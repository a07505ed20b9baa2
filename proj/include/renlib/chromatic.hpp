#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "renlib/colouring.hpp"
#include "renlib/graph.hpp"

namespace renlib {

inline constexpr int all_chi_max_order = 10;

namespace detail {

/// Exact k-colourability by backtracking in static (degree desc, index)
/// order; colour symmetry broken by allowing at most one fresh colour.
inline bool k_colourable_impl(const Graph& g, int k, std::vector<int>* out) {
    if (k >= g.n) {
        if (out) {
            out->resize(static_cast<std::size_t>(g.n));
            for (int v = 0; v < g.n; ++v) (*out)[static_cast<std::size_t>(v)] = v + 1;
        }
        return true;
    }
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> colour(static_cast<std::size_t>(g.n), 0);
    auto dfs = [&](auto&& self, int pos, int used) -> bool {
        if (pos == g.n) return true;
        int v = order[static_cast<std::size_t>(pos)];
        std::uint64_t forbid = 0;
        for (int u : g.neighbours(v))
            if (colour[static_cast<std::size_t>(u)])
                forbid |= std::uint64_t{1} << (colour[static_cast<std::size_t>(u)] - 1);
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forbid >> (c - 1)) & 1) continue;
            colour[static_cast<std::size_t>(v)] = c;
            if (self(self, pos + 1, std::max(used, c))) return true;
            colour[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    bool ok = dfs(dfs, 0, 0);
    if (ok && out) *out = colour;
    return ok;
}

inline int greedy_clique_bound(const Graph& g) {
    int best = g.n > 0 ? 1 : 0;
    for (int seed = 0; seed < g.n; ++seed) {
        std::uint64_t cand = g.neighbour_mask(seed);
        std::uint64_t clique = Graph::bit(seed);
        int size = 1;
        while (cand) {
            int pick = -1, pick_deg = -1;
            for (std::uint64_t m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int d = std::popcount(g.neighbour_mask(v) & cand);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            clique |= Graph::bit(pick);
            ++size;
            cand &= g.neighbour_mask(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

inline int greedy_colouring_bound(const Graph& g) {
    // DSATUR: colour the most saturated vertex first, ties by degree then index.
    std::vector<int> colour(static_cast<std::size_t>(g.n), 0);
    std::vector<std::uint64_t> around(static_cast<std::size_t>(g.n), 0);
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int v = -1, sat = -1, deg = -1;
        for (int u = 0; u < g.n; ++u) {
            if (colour[static_cast<std::size_t>(u)]) continue;
            int s = std::popcount(around[static_cast<std::size_t>(u)]);
            int d = g.degree(u);
            if (s > sat || (s == sat && d > deg)) {
                v = u;
                sat = s;
                deg = d;
            }
        }
        int c = std::countr_one(around[static_cast<std::size_t>(v)]) + 1;
        colour[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c);
        for (int u : g.neighbours(v)) around[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (c - 1);
    }
    return std::max(used, g.n > 0 ? 1 : 0);
}

}  // namespace detail

inline bool k_colourable(const Graph& g, int k) {
    if (k < 1) return g.n == 0;
    return detail::k_colourable_impl(g, k, nullptr);
}

/// Exact chromatic number: greedy clique lower bound, DSATUR upper bound,
/// backtracking in between. chi of an edgeless graph is 1.
inline int chromatic_number(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("chromatic number needs at least one vertex");
    if (g.edge_count() == 0) return 1;
    int lb = detail::greedy_clique_bound(g);
    int ub = detail::greedy_colouring_bound(g);
    for (int k = lb; k < ub; ++k)
        if (k_colourable(g, k)) return k;
    return ub;
}

// ---------------------------------------------------------------------------
// Canonical chi-minus colouring
// ---------------------------------------------------------------------------

namespace detail {

using ClassList = std::vector<std::vector<int>>;

inline std::vector<std::size_t> class_sizes(const ClassList& cls) {
    std::vector<std::size_t> s;
    s.reserve(cls.size());
    for (const auto& c : cls) s.push_back(c.size());
    return s;
}

/// True when `a` beats `b`: theta lexicographically larger, ties broken by
/// lexicographically smaller class lists.
inline bool classes_better(const ClassList& a, const ClassList& b) {
    auto ta = class_sizes(a), tb = class_sizes(b);
    if (ta != tb) return ta > tb;
    return a < b;
}

struct ChiMinusSearch {
    const Graph& g;
    std::map<std::uint64_t, int> chi_memo;
    std::map<std::pair<std::uint64_t, int>, std::optional<ClassList>> best_memo;

    explicit ChiMinusSearch(const Graph& graph) : g(graph) {}

    int chi_of(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto it = chi_memo.find(mask);
        if (it != chi_memo.end()) return it->second;
        int chi = chromatic_number(induced_by_mask(g, mask));
        chi_memo.emplace(mask, chi);
        return chi;
    }

    /// All independent subsets of `mask` of exactly `size` vertices, ascending
    /// vertex lists.
    template <class Fn>
    void independent_subsets(std::uint64_t mask, int size, Fn&& fn) {
        auto rec = [&](auto&& self, std::uint64_t chosen, int count, std::uint64_t cand) -> void {
            if (count == size) {
                fn(chosen);
                return;
            }
            while (cand) {
                if (std::popcount(cand) < size - count) return;
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                self(self, chosen | Graph::bit(v), count + 1, cand & ~g.neighbour_mask(v));
            }
        };
        rec(rec, 0, 0, mask);
    }

    /// Best split of `mask` into exactly `colours` non-empty independent
    /// classes: theta lexicographically maximal, canonical tie-break.
    std::optional<ClassList> solve(std::uint64_t mask, int colours) {
        if (colours == 0) return mask == 0 ? std::optional<ClassList>(ClassList{}) : std::nullopt;
        int avail = std::popcount(mask);
        if (avail < colours) return std::nullopt;
        auto key = std::make_pair(mask, colours);
        auto it = best_memo.find(key);
        if (it != best_memo.end()) return it->second;

        std::optional<ClassList> best;
        for (int size = avail - (colours - 1); size >= 1 && !best; --size) {
            independent_subsets(mask, size, [&](std::uint64_t sub) {
                std::uint64_t rest = mask & ~sub;
                if (chi_of(rest) > colours - 1) return;
                auto tail = solve(rest, colours - 1);
                if (!tail) return;
                ClassList cand;
                cand.reserve(tail->size() + 1);
                std::vector<int> first;
                for (std::uint64_t m = sub; m; m &= m - 1) first.push_back(std::countr_zero(m));
                cand.push_back(std::move(first));
                cand.insert(cand.end(), tail->begin(), tail->end());
                if (!best || classes_better(cand, *best)) best = std::move(cand);
            });
        }
        best_memo.emplace(key, best);
        return best;
    }
};

}  // namespace detail

/// The canonical chromatic colouring: exactly chi(G) colours, class sizes
/// (theta(c_1), theta(c_2), ...) lexicographically maximal over all proper
/// chi-colourings, ties broken by the lexicographically smallest class lists.
inline Colouring chi_minus_colouring(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("chi-minus colouring needs at least one vertex");
    detail::ChiMinusSearch search(g);
    auto classes = search.solve(g.vertex_mask(), chromatic_number(g));
    return colouring_from_classes(g.n, *classes);
}

/// Every proper colouring with exactly chi(G) colours, one representative per
/// colour-class partition, classes normalised by (size desc, min vertex asc).
inline std::vector<Colouring> all_chi_colourings(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("colouring enumeration needs at least one vertex");
    if (g.n > all_chi_max_order)
        throw GuardError("exhaustive colouring enumeration is guarded to order <= " +
                         std::to_string(all_chi_max_order) + ", got " + std::to_string(g.n));
    int k = chromatic_number(g);
    std::vector<Colouring> out;
    std::vector<std::uint64_t> members(static_cast<std::size_t>(k), 0);
    std::vector<int> cls(static_cast<std::size_t>(g.n), -1);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used + (g.n - v) < k) return;
        if (v == g.n) {
            detail::ClassList lists(static_cast<std::size_t>(k));
            for (int u = 0; u < g.n; ++u) lists[static_cast<std::size_t>(cls[static_cast<std::size_t>(u)])].push_back(u);
            std::sort(lists.begin(), lists.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a.front() < b.front();
            });
            out.push_back(colouring_from_classes(g.n, lists));
            return;
        }
        int limit = std::min(used, k - 1);
        for (int j = 0; j <= limit; ++j) {
            if (members[static_cast<std::size_t>(j)] & g.neighbour_mask(v)) continue;
            members[static_cast<std::size_t>(j)] |= Graph::bit(v);
            cls[static_cast<std::size_t>(v)] = j;
            self(self, v + 1, std::max(used, j + 1));
            members[static_cast<std::size_t>(j)] &= ~Graph::bit(v);
            cls[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec(rec, 0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Chromatic degrees
// ---------------------------------------------------------------------------

/// Per-vertex counts of distinct colours in closed neighbourhoods, with the
/// derived extrema. `diameter` is k - delta_chi and `r_chi` counts vertices
/// whose closed neighbourhood carries all k colours.
struct ChromaticProfile {
    int k = 0;
    std::vector<int> d_chi;
    int delta_chi = 0;
    int Delta_chi = 0;
    int diameter = 0;
    int r_chi = 0;
    bool chromatic_null = false;
};

inline ChromaticProfile chromatic_profile(const Graph& g, const Colouring& c) {
    validate_colouring(g, c);
    ChromaticProfile p;
    p.k = c.k;
    p.d_chi.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t seen = 0;
        for (std::uint64_t m = g.closed_neighbourhood(v); m; m &= m - 1)
            seen |= std::uint64_t{1} << (c.colour[static_cast<std::size_t>(std::countr_zero(m))] - 1);
        p.d_chi[static_cast<std::size_t>(v)] = std::popcount(seen);
    }
    p.delta_chi = *std::min_element(p.d_chi.begin(), p.d_chi.end());
    p.Delta_chi = *std::max_element(p.d_chi.begin(), p.d_chi.end());
    p.diameter = c.k - p.delta_chi;
    p.r_chi = static_cast<int>(std::count(p.d_chi.begin(), p.d_chi.end(), c.k));
    p.chromatic_null = p.delta_chi == p.Delta_chi;
    return p;
}

/// |d_chi(u) - d_chi(v)| under the given colouring.
inline int chromatic_distance(const Graph& g, const Colouring& c, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    auto p = chromatic_profile(g, c);
    return std::abs(p.d_chi[static_cast<std::size_t>(u)] - p.d_chi[static_cast<std::size_t>(v)]);
}

struct RChiRange {
    int min_r_chi = 0;
    int max_r_chi = 0;
};

/// Spread of r_chi over every chi-colouring; exposes how much the canonical
/// choice matters on a given graph.
inline RChiRange r_chi_range(const Graph& g) {
    RChiRange range{g.n + 1, -1};
    for (const Colouring& c : all_chi_colourings(g)) {
        int r = chromatic_profile(g, c).r_chi;
        range.min_r_chi = std::min(range.min_r_chi, r);
        range.max_r_chi = std::max(range.max_r_chi, r);
    }
    return range;
}

}  // namespace renlib
