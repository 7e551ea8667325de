#include <doctest.h>

#include <random>
#include <sstream>

#include "dpgraph/catalog.hpp"
#include "dpgraph/graph6.hpp"
#include "support/oracles.hpp"

using namespace dpgraph;

TEST_CASE("graph6 basics") {
    SUBCASE("@ is K1") {
        const Graph g = parse_graph6("@");
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("hand-decoded K3") {
        // header 63+3='B', bits 111 padded to 111000 -> 56+63=119='w'
        const Graph g = parse_graph6("Bw");
        CHECK(g == complete_graph(3));
        CHECK(serialize_graph6(complete_graph(3)) == "Bw");
    }
    SUBCASE("hand-decoded 5-vertex star D?{") {
        const Graph g = parse_graph6("D?{");
        CHECK(g.order() == 5);
        CHECK(g.edge_count() == 4);
        for (Vertex v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), BadHeader);
    CHECK_THROWS_AS(parse_graph6("~??"), BadHeader); // long form unsupported
    CHECK_THROWS_AS(parse_graph6(std::string(1, static_cast<char>(62))), BadChar);
    CHECK_THROWS_AS(parse_graph6(std::string(1, static_cast<char>(127))), BadChar);
    CHECK_THROWS_AS(parse_graph6("B"), BadLength);
    CHECK_THROWS_AS(parse_graph6("Bww"), BadLength);
    CHECK_THROWS_AS(parse_graph6("B "), BadChar); // body byte below 63
    CHECK_THROWS_AS(serialize_graph6(Graph(63)), TooLarge);
}

TEST_CASE("graph6 round-trip: exhaustive for n <= 5, random beyond") {
    for (int n = 1; n <= 5; ++n) {
        const int tri = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tri); ++mask) {
            Graph g(n);
            int slot = 0;
            for (Vertex j = 1; j < n; ++j) {
                for (Vertex i = 0; i < j; ++i, ++slot) {
                    if ((mask >> slot) & 1) g.add_edge(i, j);
                }
            }
            REQUIRE(parse_graph6(serialize_graph6(g)) == g);
        }
    }
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> order(1, 62);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracles::random_graph(order(rng), 0.3, rng);
        REQUIRE(parse_graph6(serialize_graph6(g)) == g);
    }
}

TEST_CASE("edge list format") {
    SUBCASE("parse the fixture") {
        std::istringstream in("8 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n0 7\n");
        CHECK(parse_edge_list(in) == c7_with_pendant());
    }
    SUBCASE("serialize and re-parse") {
        const Graph g = cycle_graph(5);
        std::istringstream in(serialize_edge_list(g));
        CHECK(parse_edge_list(in) == g);
    }
    SUBCASE("one-indexed ingestion") {
        std::istringstream in("3 2\n1 2\n2 3\n");
        CHECK(parse_edge_list(in, true) == path_graph(3));
    }
    SUBCASE("rejects loops, duplicates and bad headers") {
        std::istringstream loops("2 1\n1 1\n");
        CHECK_THROWS_AS(parse_edge_list(loops), LoopRejected);
        std::istringstream dup("3 2\n0 1\n1 0\n");
        CHECK_THROWS_AS(parse_edge_list(dup), InvalidEdge);
        std::istringstream header("x\n");
        CHECK_THROWS_AS(parse_edge_list(header), BadHeader);
        std::istringstream truncated("3 2\n0 1\n");
        CHECK_THROWS_AS(parse_edge_list(truncated), BadLength);
        std::istringstream range("2 1\n0 2\n");
        CHECK_THROWS_AS(parse_edge_list(range), InvalidEdge);
    }
}

TEST_CASE("edge list round-trip on 1000 seeded random graphs up to n=30") {
    std::mt19937_64 rng(5678);
    std::uniform_int_distribution<int> order(1, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracles::random_graph(order(rng), 0.25, rng);
        std::istringstream in(serialize_edge_list(g));
        REQUIRE(parse_edge_list(in) == g);
    }
}

TEST_CASE("dot output") {
    const std::string dot = to_dot(path_graph(3));
    CHECK(dot.find("graph g {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("graph6 catalog files") {
    std::istringstream in("# toy catalog\nBw\n@\n\n");
    const std::vector<Graph> graphs = read_graph6_file(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[0].label() == "Bw");
    CHECK(graphs[1].order() == 1);
}
