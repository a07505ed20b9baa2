#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "renlib/enumerate.hpp"
#include "renlib/families.hpp"
#include "renlib/graph6.hpp"

using namespace renlib;

TEST_CASE("decodes a hand-checked line") {
    // 'D' -> n=5; '?' -> 000000; '{' -> 111100: edges (0,4),(1,4),(2,4),(3,4)
    Graph g = parse_graph6("D?{");
    CHECK(g.n == 5);
    CHECK(g.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
    CHECK(!g.has_edge(0, 1));
}

TEST_CASE("encodes hand-checked graphs") {
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(4)) == "C~");
    // C_5 bits: 1 0 1 0 0 1 | 1 0 0 1 + 00 padding = 'h','c'
    CHECK(write_graph6(cycle_graph(5)) == "Dhc");
    CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("labelled round-trip") {
    CHECK(parse_graph6(write_graph6(cycle_graph(6))) == cycle_graph(6));
    for (const Graph& g : enumerate_graphs(5, false)) {
        std::string line = write_graph6(g);
        CHECK(parse_graph6(line) == g);
        CHECK(write_graph6(parse_graph6(line)) == line);
    }
}

TEST_CASE("round-trip on random graphs up to the order cap") {
    std::mt19937 rng(20240521);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("long order header") {
    Graph g = edgeless_graph(63);
    std::string line = write_graph6(g);
    CHECK(line.rfind("~??~", 0) == 0);
    CHECK(parse_graph6(line) == g);
    Graph g64(64);
    g64.add_edge(0, 63);
    CHECK(parse_graph6(write_graph6(g64)) == g64);
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const char* text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return static_cast<long long>(e.offset);
        }
        return -1LL;
    };
    CHECK(offset_of("") == 0);           // empty
    CHECK(offset_of("D?") == 2);         // truncated edge bits
    CHECK(offset_of("D?{{") == 3);       // trailing data
    CHECK(offset_of("D? ") == 2);        // byte below 63 inside edge bits
    CHECK(offset_of("\x20") == 0);       // header below 63
    CHECK(offset_of("~?@c") == 0);       // long-form order 100, above the supported cap
    CHECK(offset_of("Ao") == 1);         // nonzero padding bits (n=2 uses 1 bit)
    CHECK(offset_of("~??") == 3);        // truncated long header
}
