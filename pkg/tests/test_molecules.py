import pytest

from hypernest.chemistry.crn import Complex, validate
from hypernest.chemistry.fixtures import (
    HYDROGENATION_REACTION_ID, PI_DELOCALIZED_BOND, SIGMA_BOND, benzene_fixture, hydrogen_fixture,
    hydrogenation_fixture,
)
from hypernest.chemistry.molecules import (
    AtomSpec, BondSpec, ChemicalSystemSpec, ChemSpecError, InvalidAtomIndexError, InvalidMultiplicityError,
    MoleculeSpec, ReactionSpec, UnknownMoleculeError, build_chemical_hypergraph, build_molecular_hypergraph,
    build_reaction_network, molecule_instances,
)
from hypernest.core.hypergraph import Directed, EdgeId, Nesting, NodeId, Simple, classify
from hypernest.lib import names


def test_benzene_molecular_hypergraph():
    graph = build_molecular_hypergraph(benzene_fixture())
    assert graph.order == 12
    assert graph.size == 13
    assert classify(graph).name == names.SIMPLE_HYPERGRAPH
    pi_bond = graph.get_edge(EdgeId(12))
    assert pi_bond.label == PI_DELOCALIZED_BOND
    assert graph.order_of(pi_bond.id) == 6
    assert {graph.get_edge(EdgeId(index)).label for index in range(12)} == {SIGMA_BOND}


def test_unbonded_atoms_have_no_hyperedge_in_a_molecular_hypergraph():
    graph = build_molecular_hypergraph(MoleculeSpec('helium', (AtomSpec('He'),)))
    assert (graph.order, graph.size) == (1, 0)

    spec = MoleculeSpec('x', (AtomSpec('C'), AtomSpec('O'), AtomSpec('Ar')), (BondSpec((0, 1), SIGMA_BOND),))
    graph = build_molecular_hypergraph(spec)
    assert [edge.payload for edge in graph.edges] == [Simple((NodeId(0), NodeId(1)))]


def test_unbonded_atoms_are_wrapped_inside_molecule_instances():
    graph = build_chemical_hypergraph(ChemicalSystemSpec(molecules=(MoleculeSpec('argon', (AtomSpec('Ar'),)),)))
    wrapper, molecule = graph.edges
    assert wrapper.payload == Simple((NodeId(0),))
    assert wrapper.label == names.ATOM_WRAPPER_LABEL
    assert molecule.payload == Nesting((wrapper.id,))
    assert molecule.label == 'argon'


def test_atom_features_become_node_features():
    spec = MoleculeSpec('carbon monoxide', (AtomSpec('C', (6.0,)), AtomSpec('O', (8.0,))),
                        (BondSpec((0, 1), 'triple'),))
    graph = build_molecular_hypergraph(spec)
    assert graph.node_dim == 1
    assert graph.node_feature_matrix().tolist() == [[6.0], [8.0]]


@pytest.mark.parametrize('spec, error', [
    (MoleculeSpec('empty', ()), ChemSpecError),
    (MoleculeSpec('x', (AtomSpec('C', (1.0,)), AtomSpec('H'))), ChemSpecError),
    (MoleculeSpec('x', (AtomSpec('C'),), (BondSpec((), SIGMA_BOND),)), InvalidAtomIndexError),
    (MoleculeSpec('x', (AtomSpec('C'), AtomSpec('H')), (BondSpec((0, 0), SIGMA_BOND),)), InvalidAtomIndexError),
    (MoleculeSpec('x', (AtomSpec('C'), AtomSpec('H')), (BondSpec((0, 2), SIGMA_BOND),)), InvalidAtomIndexError),
    (MoleculeSpec('x', (AtomSpec('C'),), (BondSpec((-1,), SIGMA_BOND),)), InvalidAtomIndexError),
])
def test_invalid_molecules(spec, error):
    with pytest.raises(error):
        build_molecular_hypergraph(spec)


def test_hydrogenation_chemical_hypergraph():
    graph = build_chemical_hypergraph(hydrogenation_fixture())
    assert graph.order == 36
    assert graph.size == 42
    assert classify(graph).name == names.NESTED_DIRECTED_HYPERGRAPH

    benzene = graph.get_edge(EdgeId(13))
    assert benzene.label == 'benzene'
    assert benzene.payload == Nesting(tuple(EdgeId(index) for index in range(13)))

    reactants, products, reaction = (graph.get_edge(EdgeId(index)) for index in (39, 40, 41))
    assert reactants.label == 'r1:reactants'
    assert reactants.payload == Nesting((EdgeId(13), EdgeId(15), EdgeId(17), EdgeId(19)))
    assert products.label == 'r1:products'
    assert products.payload == Nesting((EdgeId(38),))
    assert reaction.payload == Directed(EdgeId(39), EdgeId(40))
    assert reaction.label == HYDROGENATION_REACTION_ID
    assert graph.leaf_node_set(reaction.id) == set(range(36))


def test_multiplicity_gives_atom_disjoint_copies():
    graph = build_chemical_hypergraph(hydrogenation_fixture())
    copies = molecule_instances(graph, 'hydrogen')
    assert copies == [15, 17, 19]
    leaf_sets = [graph.leaf_node_set(edge_id) for edge_id in copies]
    assert leaf_sets == [{12, 13}, {14, 15}, {16, 17}]
    assert molecule_instances(graph) == [13, 15, 17, 19, 38]


def test_unreferenced_molecules_are_still_built():
    system = ChemicalSystemSpec(molecules=(hydrogen_fixture(), benzene_fixture()))
    graph = build_chemical_hypergraph(system)
    assert graph.order == 14
    assert molecule_instances(graph) == [1, 15]
    assert classify(graph).name == names.NESTED_HYPERGRAPH


def _system_with(reaction):
    return ChemicalSystemSpec(molecules=(hydrogen_fixture(),), reactions=(reaction,))


@pytest.mark.parametrize('system, error', [
    (_system_with(ReactionSpec('r1', (('hydrogen', 1),), (('oxygen', 1),))), UnknownMoleculeError),
    (_system_with(ReactionSpec('r1', (('hydrogen', 0),), (('hydrogen', 1),))), InvalidMultiplicityError),
    (_system_with(ReactionSpec('r1', (), (('hydrogen', 1),))), ChemSpecError),
    (ChemicalSystemSpec(molecules=(hydrogen_fixture(), hydrogen_fixture())), ChemSpecError),
    (ChemicalSystemSpec(molecules=(hydrogen_fixture(),),
                        reactions=(ReactionSpec('r1', (('hydrogen', 1),), (('hydrogen', 2),)),) * 2),
     ChemSpecError),
    (ChemicalSystemSpec(molecules=(hydrogen_fixture(), MoleculeSpec('c', (AtomSpec('C', (6.0,)),)))),
     ChemSpecError),
])
def test_invalid_systems(system, error):
    with pytest.raises(error):
        build_chemical_hypergraph(system)


def test_reaction_network_of_hydrogenation():
    crn = build_reaction_network(hydrogenation_fixture())
    assert crn.species == ('benzene', 'hydrogen', 'cyclohexane')
    [reaction] = crn.reactions
    assert reaction.reactant == Complex.from_mapping({'benzene': 1, 'hydrogen': 3})
    assert reaction.product == Complex.from_mapping({'cyclohexane': 1})
    assert crn.render_complex(reaction.reactant) == 'benzene + 3hydrogen'
    assert validate(crn) == []


def test_reaction_network_merges_repeated_participants():
    system = _system_with(ReactionSpec('r1', (('hydrogen', 1), ('hydrogen', 2)), (('hydrogen', 1),)))
    crn = build_reaction_network(system)
    assert crn.reactions[0].reactant == Complex((('hydrogen', 3),))
