#include <doctest.h>

#include "dpgraph/catalog.hpp"
#include "dpgraph/graph6.hpp"

using namespace dpgraph;

TEST_CASE("isomorphism test") {
    CHECK(are_isomorphic(path_graph(4), build_graph(4, {{3, 1}, {1, 0}, {0, 2}})));
    CHECK(!are_isomorphic(path_graph(4), cycle_graph(4)));
    CHECK(!are_isomorphic(path_graph(4), path_graph(5)));
    CHECK(are_isomorphic(cycle_graph(6), build_graph(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}})));
}

TEST_CASE("generated catalogs match the published counts") {
    // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
    CHECK(graphs_of_order(1, true).size() == 1);
    CHECK(graphs_of_order(2, true).size() == 1);
    CHECK(graphs_of_order(3, true).size() == 2);
    CHECK(graphs_of_order(4, true).size() == 6);
    CHECK(graphs_of_order(5, true).size() == 21);
    CHECK(graphs_of_order(6, true).size() == 112);

    // all graphs up to isomorphism: 1, 2, 4, 11, 34
    CHECK(graphs_of_order(2, false).size() == 2);
    CHECK(graphs_of_order(3, false).size() == 4);
    CHECK(graphs_of_order(4, false).size() == 11);
    CHECK(graphs_of_order(5, false).size() == 34);

    CHECK(connected_graphs_up_to(4).size() == 1 + 1 + 2 + 6);
}

TEST_CASE("catalog entries are pairwise non-isomorphic and labeled") {
    const std::vector<Graph> catalog = graphs_of_order(4, false);
    for (size_t i = 0; i < catalog.size(); ++i) {
        CHECK(catalog[i].label() == serialize_graph6(catalog[i]));
        for (size_t j = i + 1; j < catalog.size(); ++j) {
            CHECK(!are_isomorphic(catalog[i], catalog[j]));
        }
    }
}

TEST_CASE("generator refuses infeasible orders") {
    CHECK_THROWS_AS(graphs_of_order(8, true), ScaleExceeded);
}

TEST_CASE("catalog checksums are order-sensitive and stable") {
    const std::vector<Graph> a = connected_graphs_up_to(3);
    CHECK(catalog_checksum(a) == catalog_checksum(connected_graphs_up_to(3)));
    std::vector<Graph> reversed(a.rbegin(), a.rend());
    CHECK(catalog_checksum(a) != catalog_checksum(reversed));
    CHECK(catalog_checksum_hex(a).size() == 16);
}
