#include <doctest.h>

#include <random>

#include "dpgraph/catalog.hpp"
#include "dpgraph/distance.hpp"
#include "dpgraph/graph.hpp"
#include "support/oracles.hpp"

using namespace dpgraph;

TEST_CASE("build_graph constructs simple symmetric graphs") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK(!p3.adjacent(0, 2));

    const Graph k1 = build_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    SUBCASE("duplicate edges collapse") {
        const Graph g = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("out of range endpoints rejected") {
        CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InvalidEdge);
        CHECK_THROWS_AS(build_graph(3, {{-1, 0}}), InvalidEdge);
    }
    SUBCASE("loops rejected") { CHECK_THROWS_AS(build_graph(3, {{1, 1}}), LoopRejected); }
    SUBCASE("order cap") { CHECK_THROWS_AS(Graph(65), TooLarge); }
}

TEST_CASE("c7 with pendant fixture matches its construction") {
    const Graph g = c7_with_pendant();
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 8);
    CHECK(g.adjacent(6, 0));
    CHECK(g.adjacent(0, 7));
    CHECK(g.degree(7) == 1);
    CHECK(g.degree(0) == 3);
}

TEST_CASE("bfs_distances on fixtures") {
    const DistanceMatrix p3 = bfs_distances(path_graph(3));
    CHECK(p3.at(0, 2) == 2);
    CHECK(p3.at(2, 0) == 2);
    CHECK(p3.at(1, 1) == 0);

    const DistanceMatrix isolated = bfs_distances(empty_graph(2));
    CHECK(isolated.at(0, 1) == kUnreachable);

    // pendant vertex of the 8-vertex fixture, against the independent oracle
    const Graph c7p = c7_with_pendant();
    const auto oracle = oracles::matrix_power_distances(c7p);
    int oracle_ecc = 0;
    for (int v = 0; v < 8; ++v) oracle_ecc = std::max(oracle_ecc, oracle[7][v]);
    CHECK(oracle_ecc == 4);
    CHECK(eccentricity(c7p, 7) == 4);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(c7_with_pendant()));
    CHECK(!is_connected(empty_graph(2)));
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("induce") {
    SUBCASE("dropping one vertex of C4 leaves P3") {
        const Graph c4 = cycle_graph(4);
        const auto sub = induce(c4, VertexSet(4, std::vector<Vertex>{0, 1, 2}));
        CHECK(sub.graph == path_graph(3));
        CHECK(sub.to_host == std::vector<Vertex>{0, 1, 2});
    }
    SUBCASE("full set is the identity") {
        const Graph g = c7_with_pendant();
        const auto sub = induce(g, VertexSet::full(8));
        CHECK(sub.graph == g);
    }
    SUBCASE("cycle vertices of the fixture induce C7") {
        const auto sub = induce(c7_with_pendant(), VertexSet(8, full_mask(7)));
        // edge-set comparison against an independently built C7
        CHECK(sub.graph == cycle_graph(7));
    }
    SUBCASE("universe mismatch") {
        CHECK_THROWS_AS(induce(cycle_graph(4), VertexSet::full(5)), DimensionError);
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(cycle_graph(7)) == 3);
    CHECK(diameter(empty_graph(3)) == kUnreachable);
    CHECK(diameter(complete_graph(1)) == 0);
}

TEST_CASE("distance invariants over the small catalog and random graphs") {
    std::vector<Graph> graphs = all_graphs_up_to(5);
    std::mt19937_64 rng(20260808);
    for (int i = 0; i < 25; ++i) {
        graphs.push_back(oracles::random_graph(9, 0.3, rng));
    }

    for (const Graph& g : graphs) {
        const int n = g.order();
        const DistanceMatrix dist = bfs_distances(g);
        const auto oracle = oracles::matrix_power_distances(g);
        for (int u = 0; u < n; ++u) {
            REQUIRE(dist.at(u, u) == 0);
            for (int v = 0; v < n; ++v) {
                REQUIRE(dist.at(u, v) == oracle[u][v]);
                REQUIRE(dist.at(u, v) == dist.at(v, u));
                REQUIRE((dist.at(u, v) == 1) == g.adjacent(u, v));
            }
        }
    }
}

TEST_CASE("distances never shrink under induction") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(8, 0.35, rng);
        const std::uint64_t mask = rng() & full_mask(8);
        const auto sub = induce(g, VertexSet(8, mask));
        const DistanceMatrix host = bfs_distances(g);
        const DistanceMatrix inner = bfs_distances(sub.graph);
        for (int i = 0; i < sub.graph.order(); ++i) {
            for (int j = 0; j < sub.graph.order(); ++j) {
                const Dist inside = inner.at(i, j);
                const Dist outside = host.at(sub.to_host[i], sub.to_host[j]);
                if (inside == kUnreachable) continue; // unreachable dominates any finite value
                REQUIRE(outside != kUnreachable);
                REQUIRE(inside >= outside);
            }
        }
    }
}
