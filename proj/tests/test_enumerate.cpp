#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "renlib/enumerate.hpp"
#include "renlib/families.hpp"

using namespace renlib;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u))
            if (u < v) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

TEST_CASE("canonical form is a permutation invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));
    CHECK(canonical_form(cycle_graph(4)) ==
          canonical_form(join_graphs(edgeless_graph(2), edgeless_graph(2))));
    CHECK(isomorphic(cycle_graph(4), join_graphs(edgeless_graph(2), edgeless_graph(2))));
    CHECK(!isomorphic(complete_graph(3), path_graph(3)));
}

TEST_CASE("canonical bits rebuild the graph") {
    Graph g = jahangir_graph(2, 3);
    std::string bits = canonical_form(g);
    CHECK(isomorphic(graph_from_bits(g.n, bits), g));
}

TEST_CASE("canonical guard") {
    CHECK_THROWS_AS(canonical_form(edgeless_graph(10)), GuardError);
    CHECK_NOTHROW(canonical_form(edgeless_graph(9)));
}

TEST_CASE("enumeration counts match the catalogue") {
    // numbers of graphs / connected graphs on n unlabelled vertices
    int all[] = {0, 1, 2, 4, 11, 34, 156};
    int conn[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(enumerate_graphs(n, false).size()) == all[n]);
        CHECK(static_cast<int>(enumerate_graphs(n, true).size()) == conn[n]);
    }
    CHECK_THROWS_AS(enumerate_graphs(7, false), GuardError);
    CHECK_THROWS_AS(enumerate_graphs(0, false), GuardError);
}

TEST_CASE("enumeration yields strictly increasing canonical representatives") {
    for (int n : {3, 4, 5}) {
        auto graphs = enumerate_graphs(n, false);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(canonical_form(graphs[i]) == canonical_form(graphs[i]));  // self-consistent
            if (i + 1 < graphs.size())
                CHECK(canonical_form(graphs[i]) < canonical_form(graphs[i + 1]));
        }
    }
}

TEST_CASE("small connected catalogue is the expected pair") {
    auto graphs = enumerate_graphs(3, true);
    REQUIRE(graphs.size() == 2);
    CHECK(isomorphic(graphs[0], path_graph(3)));
    CHECK(isomorphic(graphs[1], complete_graph(3)));
}
