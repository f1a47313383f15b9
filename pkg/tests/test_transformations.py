import pytest

from hypernest.core.hypergraph import (
    Directed, EdgeId, Hypergraph, Nesting, NodeId, NotDirectedError, PermutationError, Simple, UnknownEdgeError,
    permute_nodes,
)


@pytest.fixture
def singleton_graph():
    graph = Hypergraph()
    bond = graph.add_simple_edge([graph.add_node('C'), graph.add_node('O')], label='bond')
    other = graph.add_simple_edge([graph.add_node('H')], label='atom')
    singleton = graph.add_nesting_edge([bond], label='wrapper')
    graph.add_nesting_edge([singleton, other], label='molecule')
    graph.add_directed_edge(singleton, other, label='reaction')
    return graph


def test_reduce_singleton_rewrites_every_reference(singleton_graph):
    assert singleton_graph.reduce_singleton(EdgeId(2)) == 0
    assert not singleton_graph.has_edge(2)
    assert singleton_graph.get_edge(EdgeId(3)).payload == Nesting((EdgeId(0), EdgeId(1)))
    assert singleton_graph.get_edge(EdgeId(4)).payload == Directed(EdgeId(0), EdgeId(1))
    assert singleton_graph.referrers(EdgeId(0)) == (3, 4)
    assert singleton_graph.leaf_node_set(EdgeId(3)) == {0, 1, 2}


def test_reduced_ids_are_not_reused(singleton_graph):
    singleton_graph.reduce_singleton(EdgeId(2))
    assert singleton_graph.add_simple_edge([NodeId(0)]) == 5


def test_reduce_absorbs_duplicate_members():
    graph = Hypergraph()
    bond = graph.add_simple_edge([graph.add_node()])
    singleton = graph.add_nesting_edge([bond])
    outer = graph.add_nesting_edge([bond, singleton])
    graph.reduce_singleton(singleton)
    assert graph.get_edge(outer).payload == Nesting((bond,))


def test_reduce_collapses_chains_and_is_idempotent():
    graph = Hypergraph()
    bond = graph.add_simple_edge([graph.add_node()])
    inner = graph.add_nesting_edge([bond])
    outer = graph.add_nesting_edge([inner])
    top = graph.add_nesting_edge([outer, bond])
    result = graph.reduce_singleton(outer)
    assert result == bond
    assert graph.edge_ids() == (bond, top)
    assert graph.get_edge(top).payload == Nesting((bond,))
    assert graph.reduce_singleton(result) == result
    assert graph.edge_ids() == (bond, top)


def test_reduce_leaves_other_edges_alone(singleton_graph):
    before = singleton_graph.copy()
    assert singleton_graph.reduce_singleton(EdgeId(3)) == 3
    assert singleton_graph.reduce_singleton(EdgeId(0)) == 0
    assert singleton_graph.reduce_singleton(EdgeId(4)) == 4
    assert singleton_graph == before


def test_reduce_unknown_edge(singleton_graph):
    with pytest.raises(UnknownEdgeError):
        singleton_graph.reduce_singleton(EdgeId(99))


def test_expand_directed_flattens_pairs():
    graph = Hypergraph()
    e1, e2, e3, e4 = (graph.add_simple_edge([graph.add_node()]) for _ in range(4))
    left = graph.add_directed_edge(e1, e2)
    right = graph.add_directed_edge(e3, e4)
    outer = graph.add_directed_edge(left, right)
    size = graph.size
    assert graph.expand_directed(outer) == [e1, e2, e3, e4]
    assert graph.expand_directed(left) == [e1, e2]
    assert graph.size == size


def test_expand_directed_stops_at_nesting_edges():
    graph = Hypergraph()
    e1, e2 = (graph.add_simple_edge([graph.add_node()]) for _ in range(2))
    group = graph.add_nesting_edge([graph.add_directed_edge(e1, e2)])
    outer = graph.add_directed_edge(group, e1)
    assert graph.expand_directed(outer) == [group, e1]


def test_expand_directed_rejects_other_kinds():
    graph = Hypergraph()
    edge_id = graph.add_simple_edge([graph.add_node()])
    with pytest.raises(NotDirectedError):
        graph.expand_directed(edge_id)


def test_permute_nodes_relabels_simple_members():
    graph = Hypergraph()
    a, b, c = (graph.add_node(label) for label in 'abc')
    bond = graph.add_simple_edge([a, b])
    graph.add_nesting_edge([bond])
    permuted = permute_nodes(graph, {a: c, b: a, c: b})
    assert permuted.get_node(NodeId(2)).label == 'a'
    assert permuted.get_node(NodeId(0)).label == 'b'
    assert permuted.get_edge(bond).payload == Simple((NodeId(0), NodeId(2)))
    assert permuted.get_edge(EdgeId(1)).payload == Nesting((bond,))
    assert permuted.next_node_id == graph.next_node_id


@pytest.mark.parametrize('permutation', [
    {0: 1, 1: 0},
    {0: 0, 1: 1, 2: 2, 3: 3},
    {0: 1, 1: 1, 2: 2},
])
def test_permute_nodes_requires_a_bijection(permutation):
    graph = Hypergraph()
    for _ in range(3):
        graph.add_node()
    with pytest.raises(PermutationError):
        permute_nodes(graph, permutation)
