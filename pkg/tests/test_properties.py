"""Property tests over random small graphs and multigraphs."""

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_hamilton_cycle, naive_hamilton_path, naive_induced, naive_spanning_theta
from thetagraph import (build_graph, build_multigraph, canonical_form, enumerate_multigraphs, find_euler_trail,
                        find_induced, fold, from_edge_list, from_graph6, hamilton_cycle, hamilton_path_between,
                        has_claw, independence_number, induced_subgraph, is_biconnected, make_forbidden,
                        multigraph_isomorphic, replay_trail, spanning_theta, to_edge_list, to_graph6, unfold,
                        verify_hamilton_cycle, verify_theta, vertex_connectivity)
from thetagraph.harness import LINK_CHOICES

SMALL_MULTI = [f for f in enumerate_multigraphs(3, 3) if f.is_connected()]


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_theta_matches_oracle(g):
    cert = spanning_theta(g)
    assert (cert is not None) == naive_spanning_theta(g)
    if cert is not None:
        assert verify_theta(g, cert)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=7))
def test_hamilton_matches_oracle(g):
    cyc = hamilton_cycle(g)
    assert (cyc is not None) == naive_hamilton_cycle(g)
    if cyc is not None:
        assert verify_hamilton_cycle(g, cyc)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_hamilton_path_matches_oracle(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    assert (hamilton_path_between(g, x, y) is not None) == naive_hamilton_path(g, x, y)


@settings(deadline=None)
@given(graphs(min_n=4, max_n=7), st.randoms(use_true_random=False))
def test_theta_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert (spanning_theta(g) is None) == (spanning_theta(g.relabel(perm)) is None)


@given(graphs(max_n=8), st.sampled_from([("star", 3), ("path", 4), ("cycle", 4), ("n", 1, 1, 0)]))
def test_find_induced_matches_oracle(g, spec):
    pattern = make_forbidden(*spec)
    assert (find_induced(g, pattern) is not None) == naive_induced(g, pattern)


@given(graphs(max_n=8), st.data())
def test_claw_freeness_is_hereditary(g, data):
    keep = data.draw(st.lists(st.integers(0, g.n - 1), unique=True, min_size=1))
    if not has_claw(g):
        assert not has_claw(induced_subgraph(g, keep)[0])


@given(graphs(min_n=3, max_n=8))
def test_connectivity_agrees_with_biconnectivity(g):
    assert (vertex_connectivity(g) >= 2) == is_biconnected(g)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SMALL_MULTI), st.data())
def test_fold_inverts_unfold(f, data):
    assign = data.draw(st.lists(st.sampled_from(LINK_CHOICES), min_size=f.m, max_size=f.m))
    assert multigraph_isomorphic(fold(unfold(f, assign)), f) is not None


@given(st.integers(2, 5), st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=9))
def test_euler_trail_replays(n, raw):
    edges = [(u % n, v % n) for u, v in raw if u % n != v % n]
    touched = sorted({v for e in edges for v in e})
    if len(touched) < 2:
        return
    index = {v: i for i, v in enumerate(touched)}
    f = build_multigraph(len(touched), [(index[u], index[v]) for u, v in edges])
    res = find_euler_trail(f)
    if f.is_connected() and len(f.odd_vertices()) in (0, 2):
        trail, closed = res
        assert replay_trail(f, trail)
        assert closed == (not f.odd_vertices())
    else:
        assert res is None


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(min_n=2, max_n=9))
def test_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(_nx(g))


@given(graphs(max_n=8), graphs(max_n=8))
def test_canonical_form_matches_networkx_isomorphism(g, h):
    if g.n == h.n and g.m == h.m:
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(_nx(g), _nx(h))


@given(graphs(max_n=10))
def test_independence_matches_networkx(g):
    assert independence_number(g) == max((len(c) for c in nx.find_cliques(nx.complement(_nx(g)))), default=0)
