#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "naive_oracles.hpp"
#include "renlib/enumerate.hpp"
#include "renlib/families.hpp"
#include "renlib/ren.hpp"

using namespace renlib;

TEST_CASE("deletion counts for the stock families") {
    CHECK(ren_exact(cycle_graph(5)).ren == 1);
    CHECK(ren_exact(path_graph(9)).ren == 0);
    CHECK(ren_exact(wheel_graph(5)).ren == 1);
    CHECK(ren_exact(mycielskian(cycle_graph(6))).ren == 1);
    CHECK(ren_exact(complete_graph(1)).ren == 0);
}

TEST_CASE("witness is the first success in subset order") {
    RenResult r = ren_exact(cycle_graph(5));
    CHECK(r.removed == std::vector<int>{0});
    CHECK(r.kept == std::vector<int>{1, 2, 3, 4});
    CHECK(witness_valid(induced_subgraph(cycle_graph(5), r.removed).graph, r.witness));
}

TEST_CASE("survivor witness always validates") {
    for (const char* spec : {"wheel:5", "jahangir:3,3", "mycielskian:(path:4)"}) {
        Graph g = build(parse_family_spec(spec));
        RenResult r = ren_exact(g);
        CHECK(static_cast<int>(r.removed.size()) == r.ren);
        CHECK(witness_valid(induced_subgraph(g, r.removed).graph, r.witness));
    }
}

TEST_CASE("zero deletions exactly when the graph J-colours") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            CHECK((ren_exact(g).ren == 0) == j_colourable(g));
}

TEST_CASE("pruned search equals the naive oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) {
            RenResult fast = ren_exact(g);
            naive::RenAnswer slow = naive::ren(g);
            CHECK(fast.ren == slow.ren);
            CHECK(fast.removed == slow.removed);
        }
}

TEST_CASE("two vertices always survive in a connected graph with an edge") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, true))
            if (g.edge_count() >= 1) CHECK(ren_exact(g).ren <= g.n - 2);
}

TEST_CASE("the exhaustive guard points at the heuristic") {
    CHECK_THROWS_AS(ren_exact(path_graph(15)), GuardError);
    try {
        ren_exact(path_graph(15));
    } catch (const GuardError& e) {
        CHECK(std::string(e.what()).find("ren_upper_bound") != std::string::npos);
    }
    CHECK(ren_upper_bound(path_graph(15)).bound == 0);
}

TEST_CASE("greedy bound") {
    CHECK(ren_upper_bound(cycle_graph(6)).bound == 0);
    CHECK(ren_upper_bound(cycle_graph(5)).bound == 1);
    CHECK(ren_upper_bound(jahangir_graph(2, 3)).bound <= 1);
    CHECK_THROWS_AS(ren_upper_bound(complete_graph(1)), std::invalid_argument);

    SUBCASE("bound dominates the exact value and certifies a J-colourable survivor") {
        for (int n = 2; n <= 5; ++n)
            for (const Graph& g : enumerate_graphs(n, true)) {
                RenBound b = ren_upper_bound(g);
                CHECK(b.bound >= ren_exact(g).ren);
                CHECK(j_colourable(induced_subgraph(g, b.removed).graph));
            }
    }
}
