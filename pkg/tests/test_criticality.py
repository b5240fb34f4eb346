import pytest
from hypothesis import given, settings

from tdcrit import (
    CapacityError,
    DomainError,
    Graph,
    GraphInputError,
    canonical_form,
    classify,
    complete_graph,
    conjecture_stress,
    critical_spanning_subgraph,
    cycle_graph,
    delete_edge,
    disjoint_union,
    family_Gk,
    find_critical_graphs,
    is_induced_subgraph_critical,
    is_minor_critical,
    is_subgraph_critical,
    path_graph,
)
from tdcrit.criticality import minor_critical_witness
from tdcrit.graph import contract_edge, delete_vertex
from tdcrit.solver import td

from test_graph import graphs


def _subdivided_k4():
    # K_4 on 0..3 with edge 0-1 subdivided by vertex 4
    return Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])


def test_minor_critical_examples():
    assert is_minor_critical(path_graph(8))
    assert not is_minor_critical(cycle_graph(6))
    assert minor_critical_witness(cycle_graph(6))[0] == "contract"
    for n in range(1, 7):
        assert is_minor_critical(complete_graph(n))
    assert minor_critical_witness(disjoint_union(complete_graph(3), complete_graph(1))) == ("disconnected", None)


def test_subgraph_and_induced_examples():
    assert is_subgraph_critical(cycle_graph(6))
    assert not is_subgraph_critical(family_Gk(2))
    assert is_subgraph_critical(complete_graph(3))
    assert is_induced_subgraph_critical(family_Gk(2))
    assert not is_induced_subgraph_critical(path_graph(5))
    assert is_induced_subgraph_critical(complete_graph(4))


def test_classify_examples():
    c6 = classify(cycle_graph(6))
    assert (c6.td, c6.minor_critical, c6.subgraph_critical, c6.one_unique) == (4, False, True, False)
    g2 = classify(family_Gk(2))
    assert (g2.td, g2.subgraph_critical, g2.induced_subgraph_critical, g2.one_unique) == (4, False, True, True)
    k1 = classify(complete_graph(1))
    assert k1.td == 1 and all(v for k, v in k1.flags().items() if k != "td")
    with pytest.raises(GraphInputError):
        classify(Graph(0, []))


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_order_hierarchy(G):
    rep = classify(G)
    if rep.minor_critical:
        assert rep.subgraph_critical
    if rep.subgraph_critical:
        assert rep.induced_subgraph_critical
    # one-step minors decide criticality: check against two-step minors too
    if rep.minor_critical and G.number_of_edges() >= 2:
        for e in G.edges():
            H = delete_edge(G, e)
            for f in H.edges():
                assert td(contract_edge(H, f)) < rep.td
                assert td(delete_edge(H, f)) < rep.td
    if rep.induced_subgraph_critical:
        for v in range(G.n):
            assert td(delete_vertex(G, v)) < rep.td


def test_find_small_levels():
    assert [canonical_form(G) for G in find_critical_graphs(2, 4)] == [canonical_form(complete_graph(2))]
    k3 = find_critical_graphs(3, 6)
    assert sorted(canonical_form(G) for G in k3) == sorted(
        canonical_form(G) for G in (complete_graph(3), path_graph(4)))


def test_find_kinds_nested():
    minor = {canonical_form(G) for G in find_critical_graphs(4, 6, "minor")}
    sub = {canonical_form(G) for G in find_critical_graphs(4, 6, "subgraph")}
    ind = {canonical_form(G) for G in find_critical_graphs(4, 6, "induced")}
    assert minor <= sub <= ind
    assert canonical_form(cycle_graph(6)) in sub - minor
    assert canonical_form(family_Gk(2)) in ind - sub


def test_find_arguments():
    with pytest.raises(CapacityError):
        find_critical_graphs(3, 9)
    with pytest.raises(GraphInputError):
        find_critical_graphs(0, 4)
    with pytest.raises(GraphInputError):
        find_critical_graphs(3, 4, "topological")


def test_spanning_subgraph_examples():
    trail = []
    H = critical_spanning_subgraph(family_Gk(2), trajectory=trail)
    assert H.n == 5 and td(H) == 4 and is_minor_critical(H)
    assert trail[0] == family_Gk(2) and trail[-1] == H
    assert critical_spanning_subgraph(complete_graph(4)) == complete_graph(4)
    assert critical_spanning_subgraph(path_graph(8)) == path_graph(8)


def test_spanning_subgraph_needs_one_unique():
    G = _subdivided_k4()
    with pytest.raises(DomainError):
        critical_spanning_subgraph(G)
    with pytest.raises(DomainError):
        critical_spanning_subgraph(cycle_graph(6))


def test_stress_small():
    rep = conjecture_stress(3, 6)
    assert len(rep.records) == 2
    assert all(r.order <= 4 and r.max_degree <= 2 and r.one_unique for r in rep.records)
    rep2 = conjecture_stress(2, 4)
    (r,) = rep2.records
    assert (r.order, r.max_degree, r.one_unique) == (2, 1, True)
    assert rep.induced_order_bound_ok
