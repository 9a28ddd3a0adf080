import pytest

from thetagraph import (GraphError, build_graph, complete_bipartite, complete_graph, cycle_graph, from_edge_list,
                        from_graph6, gen_G, induced_subgraph, is_biconnected, list_two_cuts, path_graph,
                        petersen_graph, star_graph, structural_metrics, to_edge_list, to_graph6,
                        vertex_connectivity)
from thetagraph.graph import parse_graph


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3 and g.degrees() == [2, 2, 2]


def test_build_collapses_duplicates():
    g = build_graph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4 and g == cycle_graph(4)


def test_build_rejects_loop():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 2)])


def test_graph6_round_trip_literal():
    g = from_graph6("D?{")
    assert g.n == 5
    assert to_graph6(g) == "D?{"


def test_graph6_triangle():
    text = to_graph6(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert from_graph6(text).m == 3


@pytest.mark.parametrize("bad", ["", "D?", "D?{{"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_round_trip():
    g = petersen_graph()
    assert from_edge_list(to_edge_list(g)) == g
    assert parse_graph(to_graph6(g)) == g


def test_induced_path_in_cycle():
    sub, _ = induced_subgraph(cycle_graph(5), [1, 2, 3])
    assert sub == path_graph(3)


def test_induced_edge_in_k4():
    sub, _ = induced_subgraph(complete_graph(4), [0, 3])
    assert sub == complete_graph(2)


def test_induced_hubs_of_k24():
    g = gen_G(1, 4).graph
    hubs = [v for v in range(g.n) if g.degree(v) == 4]
    sub, _ = induced_subgraph(g, hubs)
    assert sub.n == 2 and sub.m == 0


@pytest.mark.parametrize("g, k", [(complete_graph(4), 3), (cycle_graph(5), 2), (petersen_graph(), 3),
                                  (path_graph(4), 1)])
def test_vertex_connectivity(g, k):
    assert vertex_connectivity(g) == k


def test_two_cuts_of_c4():
    cuts = dict(list_two_cuts(cycle_graph(4)))
    assert sorted(cuts) == [(0, 2), (1, 3)]
    for links in cuts.values():
        assert len(links) == 2
        for link in links:
            g = link.graph
            assert (g.n, g.m) == (3, 2) and g.degree(link.x) == g.degree(link.y) == 1


def test_two_cuts_of_k4_empty():
    assert list_two_cuts(complete_graph(4)) == []


def test_two_cuts_of_k24_only_hubs():
    g = complete_bipartite(2, 4)
    cuts = list_two_cuts(g)
    assert len(cuts) == 1
    pair, links = cuts[0]
    assert pair == (0, 1)
    assert len(links) == 4 and all(len(link.inner) == 1 for link in links)


def test_metrics_star():
    m = structural_metrics(star_graph(3))
    assert (m.alpha, m.is_cycle, m.is_locally_connected) == (3, False, False)


def test_metrics_c5():
    m = structural_metrics(cycle_graph(5))
    assert (m.alpha, m.is_cycle, m.is_locally_connected) == (2, True, False)


def test_metrics_k4():
    m = structural_metrics(complete_graph(4))
    assert (m.alpha, m.is_complete, m.is_locally_connected, m.min_degree) == (1, True, True, 3)


def test_biconnected():
    assert is_biconnected(cycle_graph(5))
    assert not is_biconnected(path_graph(4))
