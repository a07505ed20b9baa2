#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace renlib {

/// Thrown when an input is structurally valid but larger than an exact
/// search is guarded for.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency is one 64-bit row
/// per vertex, so the supported order is 64; every exact-search guard in
/// this library sits far below that.
struct Graph {
    static constexpr int max_order = 64;

    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;

    explicit Graph(int order) : n(order), adj(static_cast<std::size_t>(std::max(order, 0)), 0) {
        if (order < 0 || order > max_order)
            throw std::invalid_argument("graph order must be in 0.." + std::to_string(max_order) +
                                        ", got " + std::to_string(order));
    }

    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 0.." +
                                        std::to_string(n - 1));
    }

    bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
    }

    int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)]); }

    /// N[v]: v together with its neighbours, as a vertex bitmask.
    std::uint64_t closed_neighbourhood(int v) const {
        return adj[static_cast<std::size_t>(v)] | bit(v);
    }

    std::uint64_t neighbour_mask(int v) const { return adj[static_cast<std::size_t>(v)]; }

    std::uint64_t vertex_mask() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }

    int min_degree() const {
        int d = n;
        for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    bool connected() const {
        if (n <= 1) return true;
        std::uint64_t seen = bit(0);
        std::uint64_t frontier = bit(0);
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
            frontier = next & ~seen;
            seen |= frontier;
        }
        return seen == vertex_mask();
    }

    bool operator==(const Graph&) const = default;
};

/// Induced subgraph on the vertices of `keep`, relabelled to 0..k-1 in
/// increasing original order.
inline Graph induced_by_mask(const Graph& g, std::uint64_t keep) {
    std::vector<int> old_ids;
    for (std::uint64_t m = keep & g.vertex_mask(); m; m &= m - 1)
        old_ids.push_back(std::countr_zero(m));
    Graph out(static_cast<int>(old_ids.size()));
    for (int i = 0; i < out.n; ++i)
        for (int j = i + 1; j < out.n; ++j)
            if (g.has_edge(old_ids[static_cast<std::size_t>(i)], old_ids[static_cast<std::size_t>(j)]))
                out.add_edge(i, j);
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> kept;  // kept[new id] = original id, increasing
};

/// Removes a vertex set and returns the induced subgraph together with the
/// old-to-new relabelling. The result may be disconnected or empty.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& removed) {
    std::uint64_t drop = 0;
    for (int v : removed) {
        g.check_vertex(v);
        drop |= Graph::bit(v);
    }
    std::uint64_t keep = g.vertex_mask() & ~drop;
    InducedSubgraph out;
    out.graph = induced_by_mask(g, keep);
    for (std::uint64_t m = keep; m; m &= m - 1) out.kept.push_back(std::countr_zero(m));
    return out;
}

}  // namespace renlib
