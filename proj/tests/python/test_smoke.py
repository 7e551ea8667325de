"""Smoke tests for the python bindings."""

import pytest

import dpgraph as dpg


def test_graph_construction():
    g = dpg.Graph(3, [(0, 1), (1, 2)])
    assert g.order == 3
    assert g.edge_count == 2
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    assert len(g) == 3

    with pytest.raises(dpg.Error):
        dpg.Graph(3, [(0, 3)])
    with pytest.raises(dpg.Error):
        dpg.Graph(3, [(1, 1)])


def test_distances_and_connectivity():
    p3 = dpg.path_graph(3)
    rows = dpg.bfs_distances(p3)
    assert rows[0][2] == 2
    assert dpg.is_connected(p3)
    assert dpg.diameter(p3) == 2

    isolated = dpg.empty_graph(2)
    assert not dpg.is_connected(isolated)
    assert dpg.bfs_distances(isolated)[0][1] is None
    assert dpg.diameter(isolated) is None


def test_fixture_spectrum():
    g = dpg.c7_with_pendant()
    spec = dpg.dp_spectrum(g)
    assert spec.achievable == {1, 2, 3, 4, 5, 7, 8}
    assert spec.missing_orders() == [6]
    assert not spec.is_full()
    assert not dpg.is_dp(g)
    assert not dpg.is_sdp(g)
    assert dpg.sdp_sequence(g) is None
    assert dpg.non_dp_interval_pairs(spec) == [(5, 7)]


def test_dp_and_sdp_on_stock_graphs():
    k4 = dpg.complete_graph(4)
    assert dpg.is_dp(k4)
    assert dpg.is_sdp(k4)
    assert dpg.sdp_sequence(k4) == [0, 1, 2, 3]

    with pytest.raises(dpg.Error):
        dpg.is_dp(dpg.empty_graph(2))


def test_isometric_and_removal_sets():
    c5 = dpg.cycle_graph(5)
    assert not dpg.is_isometric(c5, [0, 1, 2, 3])
    assert dpg.is_isometric(c5, [0, 1, 2])
    assert dpg.removal_set_family(c5, 1) == [[]]
    assert len(dpg.removal_set_family(dpg.complete_graph(4), 3)) == 15


def test_products():
    c4 = dpg.cart_product(dpg.path_graph(2), dpg.path_graph(2))
    assert c4.kind == "cart"
    assert c4.graph.order == 4
    assert c4.graph.edge_count == 4
    assert dpg.are_isomorphic(c4.graph, dpg.cycle_graph(4))
    assert c4.decode(c4.encode(1, 0)) == (1, 0)

    k4 = dpg.lex_product(dpg.complete_graph(2), dpg.complete_graph(2))
    assert k4.graph == dpg.complete_graph(4)

    assert dpg.lex_distance(dpg.path_graph(3), dpg.empty_graph(2), 1, 1, 0, 1) == 2
    assert dpg.cart_distance(dpg.path_graph(3), dpg.path_graph(3), 0, 2, 0, 2) == 4
    assert dpg.cart_distance(dpg.empty_graph(2), dpg.path_graph(2), 0, 1, 0, 0) is None

    prod = dpg.cart_product(dpg.path_graph(3), dpg.path_graph(3))
    assert dpg.project([prod.encode(0, 1), prod.encode(2, 0)], prod) == [0, 2]
    edge = [prod.encode(0, 0), prod.encode(0, 1)]
    assert dpg.geodesic_factorization_check(prod, dpg.path_graph(3), dpg.path_graph(3), edge)


def test_graph6_round_trip():
    g = dpg.c7_with_pendant()
    line = dpg.serialize_graph6(g)
    assert dpg.parse_graph6(line) == g
    with pytest.raises(dpg.Error):
        dpg.parse_graph6("~oops")
    text = dpg.serialize_edge_list(g)
    assert dpg.parse_edge_list(text) == g


def test_verification_checks():
    report = dpg.check_eq1(dpg.path_graph(3), dpg.complete_graph(2))
    assert report.holds()
    assert report.instances_checked > 0

    assert dpg.thm1_criterion({1, 2, 3, 4, 5, 7, 8}, 8, 2)
    assert not dpg.thm1_criterion({1, 2, 3, 4, 5, 7, 8}, 8, 1)

    thm2 = dpg.check_thm2([dpg.path_graph(3)], [dpg.path_graph(2)])
    assert thm2.holds()


def test_hunt():
    report = dpg.hunt_conjecture(3, 3)
    assert report.consistent()
    assert report.pairs_checked == 16

    with pytest.raises(dpg.Error):
        dpg.hunt_conjecture(30, 30)
