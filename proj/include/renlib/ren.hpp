#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "renlib/enumerate.hpp"
#include "renlib/graph.hpp"
#include "renlib/jcolour.hpp"

namespace renlib {

inline constexpr int ren_exhaustive_max_order = 14;

/// Minimal deletion certificate: `removed` is the lexicographically smallest
/// vertex set of minimum size whose removal leaves a J-colourable induced
/// subgraph; `witness` is a J-colouring of the survivor (survivor labels).
struct RenResult {
    int ren = 0;
    std::vector<int> removed;
    std::vector<int> kept;
    JWitness witness;
};

namespace detail {

/// Combinations of {0..n-1} of size k in lexicographic order.
template <class Fn>
inline void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    if (k > n) return;
    while (true) {
        if (!fn(comb)) return;
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

/// Exact ren(G): grows the deletion size k = 0, 1, 2, ... and scans k-subsets
/// in lexicographic order, so the first success is the canonical witness.
/// J-colourability verdicts are cached by the survivor's canonical form while
/// the survivor is small enough to canonicalise.
inline RenResult ren_exact(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("ren needs at least one vertex");
    if (g.n > ren_exhaustive_max_order)
        throw GuardError("order " + std::to_string(g.n) + " exceeds the exhaustive guard " +
                         std::to_string(ren_exhaustive_max_order) + "; use ren_upper_bound instead");

    std::map<std::uint64_t, bool> verdicts;  // canonical key of survivor -> J-colourable
    for (int k = 0; k < g.n; ++k) {
        std::optional<RenResult> found;
        detail::for_each_combination(g.n, k, [&](const std::vector<int>& comb) {
            InducedSubgraph sub = induced_subgraph(g, comb);
            bool ok;
            if (sub.graph.n <= canonical_max_order) {
                std::uint64_t key = (std::uint64_t{1} << 40) * sub.graph.n + canonical_key(sub.graph);
                auto it = verdicts.find(key);
                if (it != verdicts.end()) ok = it->second;
                else ok = verdicts.emplace(key, j_colourable(sub.graph)).first->second;
            } else {
                ok = j_colourable(sub.graph);
            }
            if (!ok) return true;
            found = RenResult{k, comb, std::move(sub.kept), *j_number(sub.graph)};
            return false;  // first success in lex order wins
        });
        if (found) return *found;
    }
    // unreachable: a single surviving vertex is always J-colourable
    throw std::logic_error("ren search exhausted without a J-colourable survivor");
}

struct RenBound {
    int bound = 0;
    std::vector<int> removed;
};

/// Greedy upper bound: repeatedly deletes the vertex whose removal looks most
/// J-feasible (an already J-colourable remainder wins outright, then the gap
/// between the degree ceiling and the chromatic floor; ties prefer the
/// highest-degree vertex, then the smallest label).
inline RenBound ren_upper_bound(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("ren_upper_bound needs at least two vertices");
    Graph current = g;
    std::vector<int> ids(static_cast<std::size_t>(g.n));
    std::iota(ids.begin(), ids.end(), 0);
    RenBound out;
    while (!j_colourable(current)) {
        int pick = -1;
        long long pick_score = 0;
        int pick_degree = -1;
        for (int v = 0; v < current.n; ++v) {
            Graph rest = induced_by_mask(current, current.vertex_mask() & ~Graph::bit(v));
            long long score;
            if (j_colourable(rest)) score = 1'000'000;
            else score = (rest.min_degree() + 1) - chromatic_number(rest);
            int deg = current.degree(v);
            // ascending v keeps the smallest label on full ties
            if (pick < 0 || score > pick_score || (score == pick_score && deg > pick_degree)) {
                pick = v;
                pick_score = score;
                pick_degree = deg;
            }
        }
        out.removed.push_back(ids[static_cast<std::size_t>(pick)]);
        ids.erase(ids.begin() + pick);
        current = induced_by_mask(current, current.vertex_mask() & ~Graph::bit(pick));
    }
    std::sort(out.removed.begin(), out.removed.end());
    out.bound = static_cast<int>(out.removed.size());
    return out;
}

}  // namespace renlib
