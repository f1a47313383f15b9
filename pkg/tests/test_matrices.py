import numpy as np
import pytest

from hypernest.chemistry.crn import parse_crn
from hypernest.chemistry.fixtures import benzene_fixture, feinberg_fixture, metabolic_fixture
from hypernest.chemistry.molecules import build_molecular_hypergraph
from hypernest.core.hypergraph import EdgeId, Hypergraph
from hypernest.core.matrices import (
    IncidenceMatrix, directed_incidence_signed, directed_incidence_split, incidence, node_degrees,
    stoichiometric_complexes, stoichiometric_reactions_signed, weight_matrix,
)
from hypernest.lib import names


@pytest.fixture
def reaction_graph():
    graph = Hypergraph()
    a, b, c, d = (graph.add_node(label) for label in 'ABCD')
    reactants = graph.add_simple_edge([a, b])
    products = graph.add_simple_edge([c, d])
    graph.add_directed_edge(reactants, products, label='r1')
    return graph


def test_directed_incidence_of_a_single_reaction(reaction_graph):
    split = directed_incidence_split(reaction_graph)
    assert split.source.cols == (2,)
    assert split.source.entries[:, 0].tolist() == [1, 1, 0, 0]
    assert split.target.entries[:, 0].tolist() == [0, 0, 1, 1]
    assert directed_incidence_signed(reaction_graph).entries[:, 0].tolist() == [-1, -1, 1, 1]


def test_catalyst_nets_to_zero():
    graph = Hypergraph()
    a, catalyst, b = graph.add_node('A'), graph.add_node('K'), graph.add_node('B')
    reaction = graph.add_directed_edge(graph.add_simple_edge([a, catalyst]), graph.add_simple_edge([b, catalyst]))
    signed = directed_incidence_signed(graph)
    assert signed.column(reaction).tolist() == [-1, 0, 1]


def test_incidence_lifts_nested_and_directed_edges(reaction_graph):
    reaction_graph.add_nesting_edge([EdgeId(0)])
    matrix = incidence(reaction_graph)
    assert matrix.rows == (0, 1, 2, 3)
    assert matrix.cols == (0, 1, 2, 3)
    assert matrix.entries.tolist() == [
        [1, 0, 1, 1],
        [1, 0, 1, 1],
        [0, 1, 1, 0],
        [0, 1, 1, 0],
    ]
    assert matrix.row_header == names.NODE_ROW_HEADER


def test_incidence_of_benzene():
    matrix = incidence(build_molecular_hypergraph(benzene_fixture()))
    assert matrix.shape == (12, 13)
    assert sorted(matrix.entries.sum(axis=0).tolist()) == [2] * 12 + [6]
    # carbons: two ring bonds, one hydrogen bond, the delocalized bond
    assert matrix.entries.sum(axis=1).tolist() == [4] * 6 + [1] * 6


def test_empty_matrices():
    graph = Hypergraph()
    assert incidence(graph).shape == (0, 0)
    assert directed_incidence_signed(graph).shape == (0, 0)
    assert weight_matrix(graph).shape == (0, 0)


def test_split_has_no_columns_without_directed_edges():
    graph = Hypergraph()
    graph.add_simple_edge([graph.add_node()])
    split = directed_incidence_split(graph)
    assert split.source.shape == (1, 0)
    assert split.target.shape == (1, 0)


def test_weight_matrix_defaults_to_one(reaction_graph):
    reaction_graph.add_simple_edge([reaction_graph.add_node()], weight=2.5)
    np.testing.assert_array_equal(weight_matrix(reaction_graph), np.diag([1.0, 1.0, 1.0, 2.5]))


def test_node_degrees(reaction_graph):
    reaction_graph.add_simple_edge([reaction_graph.node_ids()[0]])
    assert node_degrees(reaction_graph).tolist() == [2, 1, 1, 1]


def test_stoichiometric_complexes_of_feinberg_network():
    matrix = stoichiometric_complexes(parse_crn(feinberg_fixture()))
    assert matrix.rows == ('A', 'B', 'C', 'D', 'E')
    assert matrix.cols == ('A', '2B', 'A + C', 'D', 'B + E')
    assert matrix.entries.T.tolist() == [
        [1, 0, 0, 0, 0],
        [0, 2, 0, 0, 0],
        [1, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 1, 0, 0, 1],
    ]
    assert matrix.row_header == names.SPECIES_ROW_HEADER


def test_signed_reactions_of_metabolic_network():
    matrix = stoichiometric_reactions_signed(parse_crn(metabolic_fixture()))
    assert matrix.rows == ('a', 'b', 'c', 'd', 'e')
    assert matrix.cols == ('r1+', 'r1-', 'r2', 'r3')
    assert matrix.column('r1+').tolist() == [-3, -2, 1, 0, 0]
    assert matrix.column('r1-').tolist() == [3, 2, -1, 0, 0]
    assert matrix.column('r2').tolist() == [1, -1, -1, 4, 0]
    assert matrix.column('r3').tolist() == [0, 0, 0, -1, 2]
    assert matrix.row('d').tolist() == [0, 0, 4, -1]


def test_incidence_matrix_shape_is_checked():
    with pytest.raises(ValueError):
        IncidenceMatrix(('a',), ('x', 'y'), np.zeros((1, 1), dtype=np.int64))


def test_incidence_matrix_equality():
    entries = np.array([[1, 0]], dtype=np.int64)
    assert IncidenceMatrix(('a',), ('x', 'y'), entries) == IncidenceMatrix(('a',), ('x', 'y'), entries.copy())
    assert IncidenceMatrix(('a',), ('x', 'y'), entries) != IncidenceMatrix(('a',), ('y', 'x'), entries)
