import pytest

from thetagraph import (GraphError, complete_bipartite, complete_graph, cycle_graph, find_induced, gen_G, has_claw,
                        longest_induced_path, make_forbidden, parse_forbidden, path_graph, star_graph,
                        verify_embedding)
from thetagraph.forbidden import ForbiddenSpec


def test_n000_is_triangle():
    assert make_forbidden("N", 0, 0, 0) == complete_graph(3)


def test_b15_counts():
    g = make_forbidden("B", 1, 5)
    assert (g.n, g.m) == (9, 9)


def test_star_is_claw():
    assert make_forbidden("star", 3) == star_graph(3)


def test_parse_list():
    specs = parse_forbidden("K1,3,B1,5,N1,2,3,Z6,P4")
    assert [s.name for s in specs] == ["K1,3", "B1,5", "N1,2,3", "Z6", "P4"]


def test_parse_rejects_garbage():
    with pytest.raises(GraphError):
        parse_forbidden("Q7")


def test_claw_in_k23():
    g = complete_bipartite(2, 3)
    emb = find_induced(g, star_graph(3))
    assert emb is not None and verify_embedding(g, star_graph(3), emb)
    assert emb[0] in (0, 1)


def test_no_claw_in_c5():
    assert find_induced(cycle_graph(5), star_graph(3)) is None
    assert not has_claw(cycle_graph(5))


def test_g7_is_z6_free_at_min_k():
    assert find_induced(gen_G(7, 3).graph, make_forbidden("Z", 6)) is None


def test_longest_induced_path():
    assert longest_induced_path(gen_G(2, 4).graph) == 3
    assert longest_induced_path(gen_G(4, 4).graph) == 4
    assert longest_induced_path(path_graph(6)) == 6


def test_verify_embedding_rejects_non_induced():
    assert not verify_embedding(complete_graph(3), path_graph(3), (0, 1, 2))


def test_spec_names():
    assert ForbiddenSpec("b", (1, 5)).name == "B1,5"
