import pytest
from dataclasses import replace

from oracles import naive_is_isomorphic
from thetagraph import (TRIANGLE, ColoredGraph, GraphError, build_multigraph, check_semi_unfoldment,
                        check_unfoldment, cycle_graph, fold, fold_semi, gen_catalog, gen_link, has_claw,
                        multigraph_isomorphic, parse_colored, path_link, unfold, unfold_semi)
from thetagraph.unfold import BLUE, RED, PureLinkSpec


def test_unfold_m1_counts():
    cg = unfold(gen_catalog("M1"), [TRIANGLE] * 6)
    assert cg.graph.n == 18
    assert cg.colors.count(BLUE) == 12 and cg.colors.count(RED) == 6
    assert not has_claw(cg.graph)


def test_unfold_dipole_paths():
    f = build_multigraph(2, [(0, 1)] * 3)
    cg = unfold(f, [path_link(2)] * 3)
    assert cg.graph.n == 9
    assert cg.colors.count(BLUE) == 6 and cg.colors.count(RED) == 3
    assert sorted(cg.graph.degrees()) == [2, 2, 2, 3, 3, 3, 3, 3, 3]


def test_unfold_wrong_arity():
    with pytest.raises(GraphError):
        unfold(gen_catalog("M1"), [TRIANGLE] * 5)


def test_check_unfoldment_passes():
    assert check_unfoldment(unfold(gen_catalog("M1"), [TRIANGLE] * 6)).passed


def test_recolor_red_breaks_conditions():
    cg = unfold(gen_catalog("M1"), [TRIANGLE] * 6)
    r = cg.colors.index(RED)
    colors = list(cg.colors)
    colors[r] = BLUE
    report = check_unfoldment(ColoredGraph(cg.graph, tuple(colors)))
    assert not report.passed
    assert set(report.failed()) & {"red-degree-2", "unique-red-neighbor"}
    assert report.witness(report.failed()[0])


def test_alternating_c6_fails_unique_red():
    cg = ColoredGraph(cycle_graph(6), tuple(RED if v % 2 else BLUE for v in range(6)))
    report = check_unfoldment(cg)
    assert "unique-red-neighbor" in report.failed()


@pytest.mark.parametrize("name", ["M1", "M2", "M3", "M4"])
def test_fold_round_trip(name):
    f = gen_catalog(name)
    assert multigraph_isomorphic(fold(unfold(f, [TRIANGLE] * f.m)), f) is not None


def test_fold_round_trip_mixed():
    f = gen_catalog("M1")
    cg = unfold(f, [TRIANGLE] * 3 + [path_link(3)] * 3)
    assert multigraph_isomorphic(fold(cg), f) is not None


def test_colored_text_round_trip():
    cg = unfold(gen_catalog("M2"), [TRIANGLE] * gen_catalog("M2").m)
    back = parse_colored(cg.to_text())
    assert back.graph == cg.graph and back.colors == cg.colors


def test_unfold_semi_n1_is_l1():
    f = gen_catalog("N1")
    link = unfold_semi(f, [TRIANGLE] * (f.m - 1), True)
    ref, _ = gen_link("L1")
    assert link.graph.n == 11
    assert sorted(link.graph.degrees()) == sorted(ref.graph.degrees())
    assert link.graph.m == ref.graph.m


def test_unfold_semi_n2_is_l2_and_l3():
    f = gen_catalog("N2")
    plain = unfold_semi(f, [TRIANGLE] * (f.m - 1), False)
    with_edge = unfold_semi(f, [TRIANGLE] * (f.m - 1), True)
    assert naive_is_isomorphic(plain.graph, gen_link("L2")[0].graph)
    assert naive_is_isomorphic(with_edge.graph, gen_link("L3")[0].graph)
    assert with_edge.graph.has_edge(with_edge.x0, with_edge.y0)


def test_unfold_semi_n2_paths():
    f = gen_catalog("N2")
    link = unfold_semi(f, [path_link(2)] * (f.m - 1), False)
    assert link.graph.n == 8


def test_check_semi_passes():
    f = gen_catalog("N1")
    assert check_semi_unfoldment(unfold_semi(f, [TRIANGLE] * (f.m - 1), True)).passed


def test_black_to_red_edge_fails():
    f = gen_catalog("N1")
    link = unfold_semi(f, [TRIANGLE] * (f.m - 1), True)
    r = link.colors.index(RED)
    bad = replace(link, graph=link.graph.add_edges([(link.x0, r)]))
    report = check_semi_unfoldment(bad)
    assert "black-neighborhood" in report.failed()
    assert report.witness("black-neighborhood") == (link.x0, r)


def test_black_two_nonadjacent_blues_fails():
    f = gen_catalog("N2")
    link = unfold_semi(f, [TRIANGLE] * (f.m - 1), False)
    g = link.graph
    blues = [v for v, c in enumerate(link.colors) if c == BLUE]
    target = next(b for b in blues if not g.has_edge(link.x0, b)
                  and any(g.has_edge(link.x0, w) and not g.has_edge(b, w) for w in blues))
    report = check_semi_unfoldment(replace(link, graph=g.add_edges([(link.x0, target)])))
    assert "black-neighborhood" in report.failed()
    w = report.witness("black-neighborhood")
    assert w[0] == link.x0 and len(w) == 3 and not g.has_edge(w[1], w[2])


@pytest.mark.parametrize("name", ["N1", "N2"])
def test_fold_semi_round_trip(name):
    f = gen_catalog(name)
    loop = f.edges[f.e0][0] == f.edges[f.e0][1]
    for flag in ((True,) if loop else (False, True)):
        res = fold_semi(unfold_semi(f, [TRIANGLE] * (f.m - 1), flag))
        assert multigraph_isomorphic(res.multigraph, f) is not None


def test_pure_link_tokens():
    assert PureLinkSpec.parse("t") == TRIANGLE
    assert PureLinkSpec.parse("p3") == path_link(3)
    with pytest.raises(GraphError):
        path_link(1)
