import pytest

from oracles import naive_hamilton_cycle, naive_spanning_theta
from thetagraph import (GraphError, Link, ThetaCertificate, build_graph, classify_link, complete_bipartite,
                        complete_graph, cycle_graph, gen_brousek, gen_G, gen_link, hamilton_cycle,
                        hamilton_path_between, path_graph, petersen_graph, spanning_theta, verify_hamilton_cycle,
                        verify_hamilton_path, verify_theta)


def test_k4_hamiltonian():
    cyc = hamilton_cycle(complete_graph(4))
    assert cyc is not None and verify_hamilton_cycle(complete_graph(4), cyc)


def test_petersen_not_hamiltonian():
    assert hamilton_cycle(petersen_graph()) is None


def test_k23_not_hamiltonian():
    assert hamilton_cycle(complete_bipartite(2, 3)) is None


def test_hamilton_cycle_small_n_error():
    with pytest.raises(GraphError):
        hamilton_cycle(complete_graph(2))


def test_path_between_leaves():
    p = hamilton_path_between(path_graph(4), 0, 3)
    assert p == [0, 1, 2, 3] and verify_hamilton_path(path_graph(4), p, 0, 3)


def test_path_between_middle_none():
    assert hamilton_path_between(path_graph(4), 1, 2) is None


def test_unconstrained_path():
    p = hamilton_path_between(path_graph(5), constrained=False)
    assert p is not None and verify_hamilton_path(path_graph(5), p)
    assert hamilton_path_between(complete_bipartite(1, 3), constrained=False) is None


def test_minimal_l2_has_no_hamilton_path_between_ends():
    link, _ = gen_link("L2")
    assert link.graph.n == 8
    assert hamilton_path_between(link.graph, link.x, link.y) is None


def test_theta_k4():
    g = complete_graph(4)
    cert = spanning_theta(g)
    assert cert is not None and verify_theta(g, cert)
    lengths = sorted(len(p) - 1 for p in cert.paths)
    assert lengths == [1, 2, 2]


def test_theta_none_on_cycle_and_k24():
    assert spanning_theta(cycle_graph(6)) is None
    assert spanning_theta(gen_G(1, 4).graph) is None


def test_theta_k23_is_itself_a_theta():
    g = complete_bipartite(2, 3)
    cert = ThetaCertificate(0, 1, ((0, 2, 1), (0, 3, 1), (0, 4, 1)))
    assert verify_theta(g, cert)
    assert spanning_theta(g) is not None


def test_theta_rejects_double_edge():
    g = complete_graph(4)
    assert not verify_theta(g, ThetaCertificate(0, 1, ((0, 1), (0, 1), (0, 2, 3, 1))))


def test_theta_certificate_text_round_trip():
    cert = spanning_theta(petersen_graph())
    assert cert is not None
    assert ThetaCertificate.from_text(cert.to_text()) == cert
    assert verify_theta(petersen_graph(), cert)


def test_theta_certificate_is_canonical():
    cert = spanning_theta(complete_graph(6))
    assert cert.u < cert.v
    assert list(cert.paths) == sorted(cert.paths)


def test_classify_triangle_link():
    c = classify_link(Link(complete_graph(3), 0, 1))
    assert c.simple and c.pure and c.verdict == "Simple"


def test_classify_path_link():
    c = classify_link(Link(path_graph(5), 0, 4))
    assert c.simple and c.pure


def test_classify_minimal_l1_nonsimple():
    link, _ = gen_link("L1")
    assert link.graph.n == 11
    c = classify_link(link)
    assert not c.simple and not c.pure and c.verdict == "NonSimple"


def test_brousek_pin():
    g = gen_brousek(2, 2, 2)
    assert hamilton_cycle(g) is None
    # regression pin: the decider's answer agrees with the naive oracle
    assert (spanning_theta(g) is not None) == naive_spanning_theta(g)


def test_agrees_with_oracle_on_named_graphs():
    graphs = [petersen_graph(), complete_bipartite(3, 3), gen_brousek(3, 2, 2),
              build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)])]
    for g in graphs:
        assert (hamilton_cycle(g) is not None) == naive_hamilton_cycle(g)
        assert (spanning_theta(g) is not None) == naive_spanning_theta(g)
