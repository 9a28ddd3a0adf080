import pytest

from oracles import all_graphs
from thetagraph import (build_graph, build_multigraph, canonical_form, complete_graph, cycle_graph,
                        enumerate_graphs, enumerate_multigraphs, gen_catalog, gen_H, graph_classes,
                        graphs_from_graph6, has_claw, induced_subgraph, is_biconnected, is_connected, is_cycle,
                        minimality_scan, multigraph_isomorphic, path_graph, spanning_theta, to_graph6)
from thetagraph.harness import h_property


def test_canonical_relabel():
    a = cycle_graph(4)
    b = build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(a) == canonical_form(b)


def test_canonical_distinguishes():
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))


def test_canonical_triangle():
    assert canonical_form(complete_graph(3)) == canonical_form(build_graph(3, [(2, 1), (0, 2), (1, 0)]))


def test_enum_connected_4():
    assert len(list(enumerate_graphs(4, is_connected))) == 6


def test_enum_all_3():
    assert sorted(g.m for g in enumerate_graphs(3)) == [0, 1, 2, 3]


@pytest.mark.parametrize("n", range(1, 7))
def test_class_counts_match_naive(n):
    naive = {canonical_form(g) for g in all_graphs(n)}
    ours = [canonical_form(g) for g in enumerate_graphs(n)]
    assert len(ours) == len(set(ours)) == len(naive)


def test_biconnected_5_against_naive():
    naive = {canonical_form(g) for g in all_graphs(5) if is_biconnected(g)}
    assert len(list(enumerate_graphs(5, is_biconnected))) == len(naive) == 10


def test_hereditary_prune():
    claw_free = list(enumerate_graphs(6, None, lambda g: not has_claw(g)))
    assert len(claw_free) == 85
    assert len(graph_classes(6, lambda g: not has_claw(g))) == 85


def test_graph6_stream():
    lines = [to_graph6(cycle_graph(5)), "", to_graph6(complete_graph(4))]
    assert [g.n for g in graphs_from_graph6(lines)] == [5, 4]


def test_enum_range():
    with pytest.raises(ValueError):
        list(enumerate_graphs(10))


def test_multigraph_dipoles():
    found = [f for f in enumerate_multigraphs(2, 3) if f.n == 2]
    assert sorted(f.m for f in found) == [1, 2, 3]


def test_multigraph_contains_m1_m2():
    fams = [f for f in enumerate_multigraphs(4, 3) if f.n == 4]
    for name in ("M1", "M2"):
        assert any(multigraph_isomorphic(f, gen_catalog(name)) for f in fams)


def test_multigraph_distinct_classes():
    fams = list(enumerate_multigraphs(3, 3))
    for i, f in enumerate(fams):
        for h in fams[i + 1:]:
            if sorted(f.degrees()) == sorted(h.degrees()) and f.m == h.m:
                assert multigraph_isomorphic(f, h) is None


def test_semi_contains_n1_n2():
    fams = list(enumerate_multigraphs(2, 3, semi=True))
    for name in ("N1", "N2"):
        assert any(multigraph_isomorphic(f, gen_catalog(name)) for f in fams)


def test_minimality_h7():
    verdict = minimality_scan(gen_H(7).graph, h_property, min_size=4)
    assert verdict.is_minimal and verdict.witness is None


def test_minimality_extra_vertex():
    g = gen_H(7).graph
    # a clone of a degree-2 red vertex: dominated, keeps claw-freeness
    red = next(v for v in range(g.n) if g.degree(v) == 2)
    nb = g.neighbors(red)
    big = build_graph(g.n + 1, g.edges() + [(g.n, w) for w in nb] + [(g.n, red)])
    assert h_property(big)
    verdict = minimality_scan(big, h_property, min_size=4)
    assert not verdict.is_minimal
    assert len(verdict.witness) == g.n
    assert h_property(induced_subgraph(big, verdict.witness)[0])


def test_minimality_k5():
    verdict = minimality_scan(complete_graph(5), is_biconnected, min_size=3)
    assert not verdict.is_minimal
    assert is_biconnected(induced_subgraph(complete_graph(5), verdict.witness)[0])


def test_h_property_basics():
    assert not h_property(cycle_graph(6))
    assert h_property(gen_H(7).graph)
    assert not is_cycle(gen_H(7).graph) and spanning_theta(gen_H(7).graph) is None


def test_multigraph_e0_loop_class():
    f = build_multigraph(2, [(0, 1)] * 3 + [(1, 1)], e0=3)
    assert any(multigraph_isomorphic(f, h) for h in enumerate_multigraphs(2, 3, semi=True))
