"""
Builders for molecular hypergraphs and multilevel chemical hypergraphs.

Atoms are nodes, bonds and substructures are simple hyperedges, molecules are nesting
hyperedges over their bonds and reactions are directed hyperedges between a reactant-side
and a product-side nesting hyperedge. A molecule taken ``k`` times by a reaction is
instantiated ``k`` times with its own atoms.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from hypernest.chemistry.crn import Complex, Crn, Reaction
from hypernest.core.hypergraph import EdgeId, Hypergraph, Nesting, NodeId, Simple
from hypernest.lib import helpers, names

logger = logging.getLogger(__name__)


class ChemSpecError(Exception):
    pass


class InvalidAtomIndexError(ChemSpecError):
    pass


class UnknownMoleculeError(ChemSpecError):
    pass


class InvalidMultiplicityError(ChemSpecError):
    pass


@dataclass(frozen=True)
class AtomSpec:
    symbol: str
    features: Tuple[float, ...] = ()


@dataclass(frozen=True)
class BondSpec:
    atoms: Tuple[int, ...]
    kind: str


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    atoms: Tuple[AtomSpec, ...]
    bonds: Tuple[BondSpec, ...] = ()

    def check(self) -> None:
        if not self.atoms:
            raise ChemSpecError(f'{self.name}: a molecule needs at least one atom')
        if len({len(atom.features) for atom in self.atoms}) > 1:
            raise ChemSpecError(f'{self.name}: atoms have feature vectors of different lengths')
        for bond in self.bonds:
            if not bond.atoms:
                raise InvalidAtomIndexError(f'{self.name}: {bond.kind} bond has no atoms')
            duplicates = helpers.find_duplicates(bond.atoms)
            if duplicates:
                raise InvalidAtomIndexError(f'{self.name}: {bond.kind} bond repeats atoms {sorted(duplicates)}')
            for index in bond.atoms:
                if not 0 <= index < len(self.atoms):
                    raise InvalidAtomIndexError(f'{self.name}: {bond.kind} bond references atom {index}, '
                                                f'molecule has {len(self.atoms)} atoms')

    @property
    def feature_dim(self) -> int:
        if not self.atoms:
            return 0
        return len(self.atoms[0].features)


@dataclass(frozen=True)
class ReactionSpec:
    id: str
    reactants: Tuple[Tuple[str, int], ...]
    products: Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class ChemicalSystemSpec:
    molecules: Tuple[MoleculeSpec, ...] = ()
    reactions: Tuple[ReactionSpec, ...] = ()

    def get_molecule(self, name: str) -> MoleculeSpec:
        for molecule in self.molecules:
            if molecule.name == name:
                return molecule
        raise UnknownMoleculeError(f'unknown molecule {name!r}')

    def check(self) -> None:
        duplicates = helpers.find_duplicates(molecule.name for molecule in self.molecules)
        if duplicates:
            raise ChemSpecError(f'molecule names declared more than once: {sorted(duplicates)}')
        duplicates = helpers.find_duplicates(reaction.id for reaction in self.reactions)
        if duplicates:
            raise ChemSpecError(f'reaction ids declared more than once: {sorted(duplicates)}')
        for molecule in self.molecules:
            molecule.check()
        for reaction in self.reactions:
            if not reaction.reactants or not reaction.products:
                raise ChemSpecError(f'{reaction.id}: a reaction needs reactants and products')
            for name, multiplicity in (*reaction.reactants, *reaction.products):
                self.get_molecule(name)
                if multiplicity < 1:
                    raise InvalidMultiplicityError(f'{reaction.id}: multiplicity of {name} is {multiplicity}')

    @property
    def feature_dim(self) -> int:
        dims = {molecule.feature_dim for molecule in self.molecules}
        if len(dims) > 1:
            raise ChemSpecError(f'atom feature dimensions disagree across molecules: {sorted(dims)}')
        return dims.pop() if dims else 0


def _add_molecule(graph: Hypergraph, spec: MoleculeSpec) -> Tuple[List[NodeId], List[EdgeId]]:
    """Add atoms and bond hyperedges; return the atom nodes and the bond hyperedges."""
    atom_nodes: List[NodeId] = [graph.add_node(atom.symbol, atom.features) for atom in spec.atoms]
    bond_edges = [graph.add_simple_edge([atom_nodes[index] for index in bond.atoms], label=bond.kind)
                  for bond in spec.bonds]
    return atom_nodes, bond_edges


def build_molecular_hypergraph(spec: MoleculeSpec) -> Hypergraph:
    spec.check()
    graph = Hypergraph(node_dim=spec.feature_dim)
    _add_molecule(graph, spec)
    logger.debug('built molecular hypergraph %s: %d atoms, %d hyperedges', spec.name, graph.order, graph.size)
    return graph


def _instantiate_molecule(graph: Hypergraph, spec: MoleculeSpec) -> EdgeId:
    atom_nodes, bond_edges = _add_molecule(graph, spec)
    # molecule hyperedges nest edges only
    bonded = {index for bond in spec.bonds for index in bond.atoms}
    for index, node_id in enumerate(atom_nodes):
        if index not in bonded:
            bond_edges.append(graph.add_simple_edge([node_id], label=names.ATOM_WRAPPER_LABEL))
    return graph.add_nesting_edge(bond_edges, label=spec.name)


def _instantiate_side(graph: Hypergraph,
                      system: ChemicalSystemSpec,
                      participants: Sequence[Tuple[str, int]]) -> List[EdgeId]:
    molecule_edges = []
    for name, multiplicity in participants:
        molecule = system.get_molecule(name)
        for _ in range(multiplicity):
            molecule_edges.append(_instantiate_molecule(graph, molecule))
    return molecule_edges


def build_chemical_hypergraph(system: ChemicalSystemSpec) -> Hypergraph:
    system.check()
    graph = Hypergraph(node_dim=system.feature_dim)

    referenced = set()
    for reaction in system.reactions:
        reactant_edges = _instantiate_side(graph, system, reaction.reactants)
        product_edges = _instantiate_side(graph, system, reaction.products)
        reactant_side = graph.add_nesting_edge(reactant_edges, label=f'{reaction.id}:{names.REACTANTS_SUFFIX}')
        product_side = graph.add_nesting_edge(product_edges, label=f'{reaction.id}:{names.PRODUCTS_SUFFIX}')
        graph.add_directed_edge(reactant_side, product_side, label=reaction.id)
        referenced.update(name for name, _ in (*reaction.reactants, *reaction.products))

    for molecule in system.molecules:
        if molecule.name not in referenced:
            _instantiate_molecule(graph, molecule)

    logger.debug('built chemical hypergraph: %d atoms, %d hyperedges, %d reactions',
                 graph.order, graph.size, len(system.reactions))
    return graph


def _participants_complex(participants: Iterable[Tuple[str, int]]) -> Complex:
    coefficients: Dict[str, int] = {}
    for name, multiplicity in participants:
        coefficients[name] = coefficients.get(name, 0) + multiplicity
    return Complex.from_mapping(coefficients)


def build_reaction_network(system: ChemicalSystemSpec) -> Crn:
    """
    The molecule-level view of a chemical system: molecules become species and each
    reaction's multiplicities become stoichiometric coefficients.
    """
    system.check()
    species: List[str] = []
    complexes: List[Complex] = []
    reactions: List[Reaction] = []
    for reaction in system.reactions:
        for name, _ in (*reaction.reactants, *reaction.products):
            if name not in species:
                species.append(name)
        reactant = _participants_complex(reaction.reactants)
        product = _participants_complex(reaction.products)
        for complex_ in (reactant, product):
            if complex_ not in complexes:
                complexes.append(complex_)
        reactions.append(Reaction(reaction.id, reactant, product))
    return Crn(tuple(species), tuple(complexes), tuple(reactions))


def molecule_instances(graph: Hypergraph, name: Optional[str] = None) -> List[EdgeId]:
    """Molecule hyperedges of a chemical hypergraph, optionally only those of one molecule."""
    instances = []
    for edge in graph.edges:
        if not isinstance(edge.payload, Nesting):
            continue
        if not all(isinstance(graph.get_edge(member).payload, Simple) for member in edge.payload.members):
            continue
        if name is None or edge.label == name:
            instances.append(edge.id)
    return instances
