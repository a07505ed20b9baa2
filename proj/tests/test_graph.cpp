#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "renlib/families.hpp"
#include "renlib/graph.hpp"

using namespace renlib;

TEST_CASE("graph construction and degrees") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbours(1) == std::vector<int>{0, 2});
    CHECK(g.closed_neighbourhood(0) == 0b11);
}

TEST_CASE("graph rejects self-loops and bad vertices") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("degree sums twice the edges on every family") {
    for (const char* spec : {"path:6", "cycle:7", "complete:5", "wheel:5", "fan:4",
                             "jahangir:2,4", "mycielskian:(cycle:5)", "corona:(complete:2)/(path:3)"}) {
        Graph g = build(parse_family_spec(spec));
        int twice = 0;
        for (int v = 0; v < g.n; ++v) twice += g.degree(v);
        CHECK(twice == 2 * g.edge_count());
    }
}

TEST_CASE("connectivity") {
    CHECK(path_graph(1).connected());
    CHECK(cycle_graph(5).connected());
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(!g.connected());
    CHECK(edgeless_graph(1).connected());
    CHECK(!edgeless_graph(2).connected());
}

TEST_CASE("induced subgraph relabels downward") {
    SUBCASE("cycle minus one vertex is the path, as labelled") {
        auto sub = induced_subgraph(cycle_graph(5), {0});
        CHECK(sub.graph == path_graph(4));
        CHECK(sub.kept == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("wheel minus its last rim vertex is the fan, as labelled") {
        auto sub = induced_subgraph(wheel_graph(5), {4});
        CHECK(sub.graph == fan_graph(4));
        CHECK(sub.kept == std::vector<int>{0, 1, 2, 3, 5});
    }
    SUBCASE("removing nothing is the identity") {
        Graph g = jahangir_graph(2, 3);
        CHECK(induced_subgraph(g, {}).graph == g);
    }
    SUBCASE("removing everything leaves the empty graph") {
        auto sub = induced_subgraph(path_graph(3), {0, 1, 2});
        CHECK(sub.graph.n == 0);
        CHECK(sub.kept.empty());
    }
    SUBCASE("out-of-range removals are rejected") {
        CHECK_THROWS_AS(induced_subgraph(path_graph(3), {3}), std::invalid_argument);
    }
}
