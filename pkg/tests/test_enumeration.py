import networkx as nx
import pytest
from hypothesis import given

from specgraph.enumeration import canonical_graph, canonical_key, enumerate_connected, is_isomorphic
from specgraph.graph import is_connected

from conftest import graphs


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_connected_counts(n, count):
    gs = list(enumerate_connected(n))
    assert len(gs) == count
    assert all(is_connected(g) and g.n == n for g in gs)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_classes_match_graph_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
    ours = [nx_graph(g) for g in enumerate_connected(n)]
    assert len(atlas) == len(ours)
    for h in atlas:
        assert sum(1 for g in ours if nx.is_isomorphic(g, h)) == 1


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(nx_graph(g), nx_graph(h))


@given(graphs(max_n=7))
def test_canonical_form_is_permutation_invariant(g):
    perm = list(reversed(range(g.n)))
    assert canonical_key(g.permute(perm)) == canonical_key(g)
    assert canonical_graph(g) == canonical_graph(g.permute(perm))
    assert nx.is_isomorphic(nx_graph(canonical_graph(g)), nx_graph(g))


def test_enumeration_is_deterministic():
    a = [g.edges() for g in enumerate_connected(5)]
    b = [g.edges() for g in enumerate_connected(5)]
    assert a == b


@pytest.mark.parametrize("n", [0, 8])
def test_enumeration_cap(n):
    with pytest.raises(ValueError):
        list(enumerate_connected(n))
