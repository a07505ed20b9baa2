#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "renlib/graph.hpp"

namespace renlib {

/// Total vertex colouring with colours 1..k, every colour used at least once.
struct Colouring {
    int k = 0;
    std::vector<int> colour;  // vertex -> 1..k

    std::vector<int> theta() const {
        std::vector<int> t(static_cast<std::size_t>(k), 0);
        for (int c : colour) ++t[static_cast<std::size_t>(c - 1)];
        return t;
    }

    /// Colour classes in colour order; vertices ascending within a class.
    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> cls(static_cast<std::size_t>(k));
        for (std::size_t v = 0; v < colour.size(); ++v)
            cls[static_cast<std::size_t>(colour[v] - 1)].push_back(static_cast<int>(v));
        return cls;
    }

    bool operator==(const Colouring&) const = default;
};

inline bool is_proper(const Graph& g, const Colouring& c) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u))
            if (u < v && c.colour[static_cast<std::size_t>(u)] == c.colour[static_cast<std::size_t>(v)])
                return false;
    return true;
}

inline bool uses_all_colours(const Colouring& c) {
    std::vector<char> used(static_cast<std::size_t>(c.k), 0);
    for (int col : c.colour) {
        if (col < 1 || col > c.k) return false;
        used[static_cast<std::size_t>(col - 1)] = 1;
    }
    return std::find(used.begin(), used.end(), 0) == used.end();
}

inline void validate_colouring(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.colour.size()) != g.n)
        throw std::invalid_argument("colouring covers " + std::to_string(c.colour.size()) +
                                    " vertices but the graph has " + std::to_string(g.n));
    if (g.n > 0 && c.k < 1) throw std::invalid_argument("colouring needs at least one colour");
    if (!uses_all_colours(c)) throw std::invalid_argument("colouring must use every colour 1..k");
    if (!is_proper(g, c)) throw std::invalid_argument("colouring is not proper");
}

inline Colouring colouring_from_classes(int n, const std::vector<std::vector<int>>& cls) {
    Colouring c;
    c.k = static_cast<int>(cls.size());
    c.colour.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (int v : cls[i]) c.colour[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    return c;
}

/// Reorders colour classes by (size descending, smallest vertex ascending).
inline Colouring normalise_classes(const Colouring& c) {
    auto cls = c.classes();
    std::sort(cls.begin(), cls.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return colouring_from_classes(static_cast<int>(c.colour.size()), cls);
}

}  // namespace renlib
