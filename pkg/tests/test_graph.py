import pytest
from hypothesis import given, settings, strategies as st

from tdcrit import (
    Graph,
    GraphInputError,
    CapacityError,
    complete_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_isomorphic,
    path_graph,
)
from tdcrit.graph import delete_vertices, empty_graph, star_graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_delete_vertex_examples():
    assert delete_vertex(complete_graph(3), 0) == complete_graph(2)
    H = delete_vertex(path_graph(4), 1)
    assert H == Graph(3, [(1, 2)])
    assert delete_vertex(complete_graph(1), 0) == empty_graph(0)


def test_delete_edge_examples():
    assert is_isomorphic(delete_edge(complete_graph(3), (0, 1)), path_graph(3))
    assert delete_edge(path_graph(2), (1, 0)) == empty_graph(2)
    for e in cycle_graph(4).edges():
        assert is_isomorphic(delete_edge(cycle_graph(4), e), path_graph(4))


def test_contract_edge_examples():
    for e in cycle_graph(6).edges():
        assert is_isomorphic(contract_edge(cycle_graph(6), e), cycle_graph(5))
    assert contract_edge(complete_graph(3), (1, 2)) == complete_graph(2)
    assert contract_edge(path_graph(2), (0, 1)) == complete_graph(1)


def test_union_and_components():
    assert disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2)
    U = disjoint_union(path_graph(2), path_graph(3))
    assert connected_components(U) == [frozenset({0, 1}), frozenset({2, 3, 4})]
    assert disjoint_union(empty_graph(0), cycle_graph(5)) == cycle_graph(5)
    assert connected_components(path_graph(3)) == [frozenset({0, 1, 2})]
    assert connected_components(empty_graph(2)) == [frozenset({0}), frozenset({1})]


def test_induced_subgraph_examples():
    C = cycle_graph(5)
    assert induced_subgraph(C, range(5)) == C
    assert induced_subgraph(complete_graph(4), [1, 3]) == complete_graph(2)
    assert induced_subgraph(C, [1, 2, 3]) == path_graph(3)


@pytest.mark.parametrize("bad", [
    lambda: Graph(2, [(0, 0)]),
    lambda: Graph(2, [(0, 2)]),
    lambda: Graph(-1, []),
    lambda: Graph(3, [(0, 1, 2)]),
    lambda: delete_vertex(path_graph(3), 3),
    lambda: delete_edge(path_graph(3), (0, 2)),
    lambda: contract_edge(path_graph(3), (0, 2)),
    lambda: induced_subgraph(path_graph(3), [5]),
    lambda: cycle_graph(2),
    lambda: Graph.from_adjacency([0b10, 0b00]),
])
def test_invalid_input_rejected(bad):
    with pytest.raises(GraphInputError):
        bad()


def test_capacity():
    with pytest.raises(CapacityError):
        disjoint_union(path_graph(20), path_graph(20))


def test_duplicate_edges_collapse():
    G = Graph(3, [(0, 1), (1, 0), (1, 2)])
    assert G.number_of_edges() == 2
    assert G == path_graph(3)
    assert hash(G) == hash(path_graph(3))


def test_star():
    S = star_graph(3)
    assert S.degrees() == [3, 1, 1, 1]


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1))
def test_delete_vertex_counts(G):
    for v in range(G.n):
        H = delete_vertex(G, v)
        assert H.n == G.n - 1
        assert H.number_of_edges() == G.number_of_edges() - G.degree(v)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2))
def test_contract_counts(G):
    for u, v in G.edges():
        H = contract_edge(G, (u, v))
        common = len(set(G.neighbors(u)) & set(G.neighbors(v)))
        assert H.n == G.n - 1
        assert H.number_of_edges() == G.number_of_edges() - 1 - common


@settings(max_examples=150, deadline=None)
@given(graphs(), graphs())
def test_union_components(G, H):
    U = disjoint_union(G, H)
    assert U.n == G.n + H.n
    assert len(connected_components(U)) == len(connected_components(G)) + len(connected_components(H))
    assert sorted(v for c in connected_components(U) for v in c) == list(range(U.n))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1), st.data())
def test_induced_subgraph_edges(G, data):
    keep = sorted(data.draw(st.sets(st.integers(0, G.n - 1))))
    H = induced_subgraph(G, keep)
    assert H.n == len(keep)
    for i, a in enumerate(keep):
        for j, b in enumerate(keep):
            assert H.has_edge(i, j) == G.has_edge(a, b) if i != j else True
    gone = [v for v in range(G.n) if v not in keep]
    assert delete_vertices(G, gone) == H
