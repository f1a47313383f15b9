import math

import numpy as np
import pytest

from hypernest.core.hypergraph import (
    Directed, DuplicateIdError, DuplicateMemberError, EdgeId, EmptyHyperedgeError, FeatureDimensionError, Hyperedge,
    Hypergraph, HypergraphKind, InvalidFeatureError, InvalidWeightError, Nesting, Node, NodeId, Simple,
    UnknownEdgeError, UnknownNodeError, classify, sub_hypergraph,
)
from hypernest.lib import names


@pytest.fixture
def reaction_graph():
    """A + B -> C + D as two simple hyperedges joined by a directed one."""
    graph = Hypergraph()
    a, b, c, d = (graph.add_node(label) for label in 'ABCD')
    reactants = graph.add_simple_edge([a, b], label='A + B')
    products = graph.add_simple_edge([c, d], label='C + D')
    graph.add_directed_edge(reactants, products, label='r1')
    return graph


def test_empty_graph():
    graph = Hypergraph()
    assert graph.order == 0
    assert graph.size == 0
    assert classify(graph) == HypergraphKind(nested=False, directed=False)
    assert graph.node_feature_matrix().shape == (0, 0)
    assert graph.edge_feature_matrix().shape == (0, 0)


def test_ids_are_allocated_in_order():
    graph = Hypergraph()
    assert [graph.add_node() for _ in range(3)] == [0, 1, 2]
    assert graph.add_simple_edge([NodeId(2), NodeId(0)]) == 0
    assert graph.get_edge(EdgeId(0)).payload == Simple((NodeId(0), NodeId(2)))
    assert graph.next_node_id == 3
    assert graph.next_edge_id == 1


def test_node_features_must_match_dimension():
    graph = Hypergraph(node_dim=2)
    node_id = graph.add_node('C', [6, 12.011])
    assert graph.get_node(node_id).features == (6.0, 12.011)
    with pytest.raises(FeatureDimensionError):
        graph.add_node('H', [1])
    with pytest.raises(FeatureDimensionError):
        graph.add_node('H')


@pytest.mark.parametrize('value', [math.nan, math.inf, -math.inf, 10 ** 400])
def test_non_finite_features_are_rejected(value):
    graph = Hypergraph(node_dim=1, edge_dim=1)
    with pytest.raises(InvalidFeatureError):
        graph.add_node('C', [value])
    node_id = graph.add_node('C', [1])
    with pytest.raises(InvalidFeatureError):
        graph.add_simple_edge([node_id], features=[value])
    assert (graph.order, graph.size) == (1, 0)


def test_edge_features_must_match_dimension():
    graph = Hypergraph(edge_dim=1)
    node_id = graph.add_node()
    with pytest.raises(FeatureDimensionError):
        graph.add_simple_edge([node_id])
    edge_id = graph.add_simple_edge([node_id], features=[0.5])
    assert graph.edge_feature_matrix().tolist() == [[0.5]]
    assert graph.get_edge(edge_id).features == (0.5,)


def test_negative_dimension():
    with pytest.raises(FeatureDimensionError):
        Hypergraph(node_dim=-1)


def test_simple_edge_validation():
    graph = Hypergraph()
    node_id = graph.add_node()
    with pytest.raises(EmptyHyperedgeError):
        graph.add_simple_edge([])
    with pytest.raises(DuplicateMemberError):
        graph.add_simple_edge([node_id, node_id])
    with pytest.raises(UnknownNodeError):
        graph.add_simple_edge([node_id, NodeId(7)])
    assert graph.size == 0


def test_nesting_edge_validation():
    graph = Hypergraph()
    edge_id = graph.add_simple_edge([graph.add_node()])
    with pytest.raises(EmptyHyperedgeError):
        graph.add_nesting_edge([])
    with pytest.raises(DuplicateMemberError):
        graph.add_nesting_edge([edge_id, edge_id])
    with pytest.raises(UnknownEdgeError):
        graph.add_nesting_edge([EdgeId(5)])


def test_directed_edge_needs_existing_endpoints():
    graph = Hypergraph()
    edge_id = graph.add_simple_edge([graph.add_node()])
    with pytest.raises(UnknownEdgeError):
        graph.add_directed_edge(edge_id, EdgeId(9))
    loop = graph.add_directed_edge(edge_id, edge_id)
    assert graph.leaf_node_set(loop) == {0}


@pytest.mark.parametrize('weight', [-1.0, math.nan, math.inf, 10 ** 400])
def test_invalid_weight(weight):
    graph = Hypergraph()
    with pytest.raises(InvalidWeightError):
        graph.add_simple_edge([graph.add_node()], weight=weight)


def test_lookups_of_unknown_ids():
    graph = Hypergraph()
    with pytest.raises(UnknownNodeError):
        graph.get_node(NodeId(0))
    with pytest.raises(UnknownEdgeError):
        graph.get_edge(EdgeId(0))
    with pytest.raises(UnknownEdgeError):
        graph.leaf_node_set(EdgeId(0))


def test_order_of(reaction_graph):
    assert reaction_graph.order_of(EdgeId(0)) == 2
    assert reaction_graph.order_of(EdgeId(2)) == 2
    reaction_graph.add_simple_edge([NodeId(0), NodeId(1), NodeId(2)])
    assert reaction_graph.order_of(EdgeId(3)) == 3


def test_leaf_node_sets_through_nesting_and_direction(reaction_graph):
    assert reaction_graph.leaf_node_set(EdgeId(2)) == {0, 1, 2, 3}
    nested = reaction_graph.add_nesting_edge([EdgeId(0)])
    assert reaction_graph.leaf_node_set(nested) == {0, 1}
    assert reaction_graph.substructure(nested) == {0, 1}
    assert reaction_graph.leaf_node_sets() == {0: {0, 1}, 1: {2, 3}, 2: {0, 1, 2, 3}, 3: {0, 1}}


def test_is_nested_in(reaction_graph):
    assert reaction_graph.is_nested_in(EdgeId(0), EdgeId(2))
    assert not reaction_graph.is_nested_in(EdgeId(2), EdgeId(0))


@pytest.mark.parametrize('with_nesting, with_directed, expected', [
    (False, False, names.SIMPLE_HYPERGRAPH),
    (True, False, names.NESTED_HYPERGRAPH),
    (False, True, names.DIRECTED_HYPERGRAPH),
    (True, True, names.NESTED_DIRECTED_HYPERGRAPH),
])
def test_classify(with_nesting, with_directed, expected):
    graph = Hypergraph()
    edge_id = graph.add_simple_edge([graph.add_node(), graph.add_node()])
    if with_nesting:
        graph.add_nesting_edge([edge_id])
    if with_directed:
        graph.add_directed_edge(edge_id, edge_id)
    kind = classify(graph)
    assert (kind.nested, kind.directed) == (with_nesting, with_directed)
    assert kind.name == expected


def test_referrers_and_degrees(reaction_graph):
    molecule = reaction_graph.add_nesting_edge([EdgeId(0), EdgeId(1)])
    assert reaction_graph.referrers(EdgeId(0)) == (2, molecule)
    assert reaction_graph.referrers(EdgeId(2)) == ()
    assert reaction_graph.node_degree(NodeId(0)) == 1
    reaction_graph.add_simple_edge([NodeId(0)])
    assert reaction_graph.node_degree(NodeId(0)) == 2


def test_feature_matrices_follow_id_order():
    graph = Hypergraph(node_dim=1, edge_dim=2)
    graph.add_node('x', [1])
    graph.add_node('y', [2])
    graph.add_simple_edge([NodeId(1)], features=[3, 4])
    np.testing.assert_array_equal(graph.node_feature_matrix(), np.array([[1.0], [2.0]]))
    np.testing.assert_array_equal(graph.edge_feature_matrix(), np.array([[3.0, 4.0]]))


def test_insert_preserves_ids():
    graph = Hypergraph()
    graph.insert_node(Node(NodeId(4), 'C'))
    graph.insert_edge(Hyperedge(EdgeId(7), Simple((NodeId(4),)), 'atom'))
    assert graph.next_node_id == 5
    assert graph.next_edge_id == 8
    assert graph.add_node() == 5
    with pytest.raises(DuplicateIdError):
        graph.insert_node(Node(NodeId(4)))
    with pytest.raises(DuplicateIdError):
        graph.insert_edge(Hyperedge(EdgeId(7), Nesting((EdgeId(7),))))
    with pytest.raises(UnknownEdgeError):
        graph.insert_edge(Hyperedge(EdgeId(8), Directed(EdgeId(7), EdgeId(8))))


def test_insert_edge_normalizes_member_order():
    graph = Hypergraph()
    for node_id in (0, 1, 2):
        graph.insert_node(Node(NodeId(node_id)))
    graph.insert_edge(Hyperedge(EdgeId(0), Simple((NodeId(2), NodeId(0)))))
    assert graph.get_edge(EdgeId(0)).payload == Simple((NodeId(0), NodeId(2)))


def test_check_acyclicity_mode_accepts_valid_graphs():
    graph = Hypergraph(check_acyclicity=True)
    edge_id = graph.add_simple_edge([graph.add_node()])
    nested = graph.add_nesting_edge([edge_id])
    graph.add_directed_edge(edge_id, nested)
    graph.check_acyclicity()
    assert graph.size == 3


def test_equality_and_copy(reaction_graph):
    duplicate = reaction_graph.copy()
    assert duplicate == reaction_graph
    duplicate.add_node('E')
    assert duplicate != reaction_graph
    assert reaction_graph.order == 4


def test_sub_hypergraph_keeps_references_and_ids(reaction_graph):
    molecule = reaction_graph.add_nesting_edge([EdgeId(1)])
    sub = sub_hypergraph(reaction_graph, [molecule])
    assert sub.edge_ids() == (1, molecule)
    assert sub.node_ids() == (2, 3)
    assert sub.next_edge_id == reaction_graph.next_edge_id

    whole = sub_hypergraph(reaction_graph, [EdgeId(2)])
    assert whole.edge_ids() == (0, 1, 2)
    assert whole.order == 4

    with pytest.raises(UnknownEdgeError):
        sub_hypergraph(reaction_graph, [EdgeId(42)])
