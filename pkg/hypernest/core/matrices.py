"""
Incidence and stoichiometric matrices.

Rows are nodes in ascending id order (species in declaration order for reaction networks);
columns are hyperedges in ascending id order (complexes in first-appearance order,
reactions in declaration order). Nesting and directed hyperedges are lifted to node sets
through their transitive leaf nodes.
"""
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, List, Sequence, Tuple

import numpy as np

from hypernest.core.hypergraph import Directed, EdgeId, Hypergraph, Simple
from hypernest.lib import names

if TYPE_CHECKING:
    from hypernest.chemistry.crn import Crn  # noqa: F401

Label = Any


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    rows: Tuple[Label, ...]
    cols: Tuple[Label, ...]
    entries: np.ndarray
    row_header: str = names.NODE_ROW_HEADER

    def __post_init__(self) -> None:
        if self.entries.shape != (len(self.rows), len(self.cols)):
            raise ValueError(f'entries have shape {self.entries.shape}, '
                             f'expected {(len(self.rows), len(self.cols))}')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return (self.rows == other.rows
                and self.cols == other.cols
                and self.row_header == other.row_header
                and np.array_equal(self.entries, other.entries))

    __hash__ = None  # type: ignore

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def column(self, label: Label) -> np.ndarray:
        return self.entries[:, self.cols.index(label)]

    def row(self, label: Label) -> np.ndarray:
        return self.entries[self.rows.index(label), :]


@dataclass(frozen=True)
class SplitIncidence:
    source: IncidenceMatrix
    target: IncidenceMatrix


def _empty_entries(rows: Sequence[Label], cols: Sequence[Label]) -> np.ndarray:
    return np.zeros((len(rows), len(cols)), dtype=np.int64)


def _directed_edge_ids(graph: Hypergraph) -> List[EdgeId]:
    return [edge.id for edge in graph.edges if isinstance(edge.payload, Directed)]


def incidence(graph: Hypergraph) -> IncidenceMatrix:
    """H(v, e) = 1 if v is a leaf node of e, and 0 otherwise."""
    rows = graph.node_ids()
    cols = graph.edge_ids()
    entries = _empty_entries(rows, cols)
    row_index = {node_id: index for index, node_id in enumerate(rows)}
    for col, leaves in enumerate(graph.leaf_node_sets().values()):
        for node_id in leaves:
            entries[row_index[node_id], col] = 1
    return IncidenceMatrix(rows, cols, entries)


def directed_incidence_split(graph: Hypergraph) -> SplitIncidence:
    rows = graph.node_ids()
    cols = tuple(_directed_edge_ids(graph))
    row_index = {node_id: index for index, node_id in enumerate(rows)}
    source_entries = _empty_entries(rows, cols)
    target_entries = _empty_entries(rows, cols)
    for col, edge_id in enumerate(cols):
        payload = graph.get_edge(edge_id).payload
        assert isinstance(payload, Directed)
        for node_id in graph.leaf_node_set(payload.source):
            source_entries[row_index[node_id], col] = 1
        for node_id in graph.leaf_node_set(payload.target):
            target_entries[row_index[node_id], col] = 1
    return SplitIncidence(source=IncidenceMatrix(rows, cols, source_entries),
                          target=IncidenceMatrix(rows, cols, target_entries))


def directed_incidence_signed(graph: Hypergraph) -> IncidenceMatrix:
    """H = H_t - H_s; a node on both sides of a hyperedge (a catalyst) nets to 0."""
    split = directed_incidence_split(graph)
    return IncidenceMatrix(split.source.rows, split.source.cols, split.target.entries - split.source.entries)


def weight_matrix(graph: Hypergraph) -> np.ndarray:
    """Diagonal hyperedge weight matrix W; unset weights count as 1."""
    weights = [1.0 if edge.weight is None else edge.weight for edge in graph.edges]
    return np.diag(np.array(weights, dtype=float)).reshape(graph.size, graph.size)


def node_degrees(graph: Hypergraph) -> np.ndarray:
    """Number of simple hyperedges containing each node, ascending node id."""
    rows = graph.node_ids()
    row_index = {node_id: index for index, node_id in enumerate(rows)}
    degrees = np.zeros(len(rows), dtype=np.int64)
    for edge in graph.edges:
        if isinstance(edge.payload, Simple):
            for node_id in edge.payload.members:
                degrees[row_index[node_id]] += 1
    return degrees


def stoichiometric_complexes(crn: 'Crn') -> IncidenceMatrix:
    """S: species x complexes, S[s][y] = stoichiometric coefficient of s in y."""
    rows = crn.species
    cols = tuple(crn.render_complex(complex_) for complex_ in crn.complexes)
    entries = _empty_entries(rows, cols)
    for col, complex_ in enumerate(crn.complexes):
        for row, species in enumerate(rows):
            entries[row, col] = complex_.coefficient(species)
    return IncidenceMatrix(rows, cols, entries, row_header=names.SPECIES_ROW_HEADER)


def stoichiometric_reactions_signed(crn: 'Crn') -> IncidenceMatrix:
    """Species x reactions, each entry the net change: product minus reactant coefficient."""
    rows = crn.species
    cols = tuple(reaction.id for reaction in crn.reactions)
    entries = _empty_entries(rows, cols)
    for col, reaction in enumerate(crn.reactions):
        for row, species in enumerate(rows):
            entries[row, col] = reaction.product.coefficient(species) - reaction.reactant.coefficient(species)
    return IncidenceMatrix(rows, cols, entries, row_header=names.SPECIES_ROW_HEADER)
