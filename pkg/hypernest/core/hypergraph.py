"""
Unified hypergraph model.

A hyperedge is one of three payloads: a ``Simple`` node set, a ``Nesting`` set of
hyperedges, or a ``Directed`` ordered pair of hyperedges. Graphs are built
append-only; ``reduce_singleton`` is the only operation that rewrites existing edges.

A graph under construction has a single writer. Once built, all query methods are
pure and the graph may be read from several threads.
"""
import dataclasses
import logging
from dataclasses import dataclass
from typing import (
    Dict, FrozenSet, Iterable, List, Mapping, NewType, Optional, Sequence, Tuple, Union,
)

import networkx as nx
import numpy as np

from hypernest.lib import helpers, names

logger = logging.getLogger(__name__)

NodeId = NewType('NodeId', int)
EdgeId = NewType('EdgeId', int)


class HypergraphError(Exception):
    pass


class FeatureDimensionError(HypergraphError):
    pass


class InvalidFeatureError(HypergraphError):
    pass


class EmptyHyperedgeError(HypergraphError):
    pass


class DuplicateMemberError(HypergraphError):
    pass


class DuplicateIdError(HypergraphError):
    pass


class UnknownNodeError(HypergraphError):
    pass


class UnknownEdgeError(HypergraphError):
    pass


class NotDirectedError(HypergraphError):
    pass


class PermutationError(HypergraphError):
    pass


class InvalidWeightError(HypergraphError):
    pass


class CycleError(HypergraphError):
    def __init__(self, cycle: Sequence[int]) -> None:
        self.cycle = list(cycle)
        path = ' -> '.join(f'e{edge_id}' for edge_id in [*self.cycle, *self.cycle[:1]])
        super().__init__(f'containment cycle: {path}')


@dataclass(frozen=True)
class Node:
    id: NodeId
    label: str = ''
    features: Tuple[float, ...] = ()


@dataclass(frozen=True)
class Simple:
    members: Tuple[NodeId, ...]

    @property
    def kind(self) -> str:
        return names.SIMPLE_KIND


@dataclass(frozen=True)
class Nesting:
    members: Tuple[EdgeId, ...]

    @property
    def kind(self) -> str:
        return names.NESTING_KIND


@dataclass(frozen=True)
class Directed:
    source: EdgeId
    target: EdgeId

    @property
    def kind(self) -> str:
        return names.DIRECTED_KIND


Payload = Union[Simple, Nesting, Directed]


def referenced_edges(payload: Payload) -> Tuple[EdgeId, ...]:
    """Edges a payload points at; empty for simple payloads."""
    if isinstance(payload, Nesting):
        return payload.members
    if isinstance(payload, Directed):
        if payload.source == payload.target:
            return (payload.source,)
        return (payload.source, payload.target)
    return ()


def _finite_features(features: Optional[Iterable[float]], owner: str) -> Tuple[float, ...]:
    raw: Tuple[float, ...] = () if features is None else tuple(features)
    if any(helpers.finite_float(value) is None for value in raw):
        raise InvalidFeatureError(f'{owner} features must be finite numbers, got {list(raw)!r}')
    return helpers.coerce_features(raw)


@dataclass(frozen=True)
class Hyperedge:
    id: EdgeId
    payload: Payload
    label: str = ''
    features: Tuple[float, ...] = ()
    weight: Optional[float] = None

    @property
    def kind(self) -> str:
        return self.payload.kind


@dataclass(frozen=True)
class HypergraphKind:
    nested: bool
    directed: bool

    @property
    def name(self) -> str:
        if self.nested and self.directed:
            return names.NESTED_DIRECTED_HYPERGRAPH
        if self.nested:
            return names.NESTED_HYPERGRAPH
        if self.directed:
            return names.DIRECTED_HYPERGRAPH
        return names.SIMPLE_HYPERGRAPH


class Hypergraph:
    def __init__(self, node_dim: int = 0, edge_dim: int = 0, *, check_acyclicity: bool = False) -> None:
        if node_dim < 0 or edge_dim < 0:
            raise FeatureDimensionError('feature dimensions must be non-negative')
        self.node_dim = node_dim
        self.edge_dim = edge_dim
        self.check_acyclicity_on_mutation = check_acyclicity

        self._nodes: Dict[NodeId, Node] = {}
        self._edges: Dict[EdgeId, Hyperedge] = {}
        self._next_node_id = 0
        self._next_edge_id = 0
        # referrer edge -> referenced edge
        self._references = nx.DiGraph()

    def __repr__(self) -> str:
        return f'<Hypergraph order={self.order} size={self.size} kind={classify(self).name!r}>'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.node_dim == other.node_dim
                and self.edge_dim == other.edge_dim
                and self._nodes == other._nodes
                and self._edges == other._edges)

    __hash__ = None  # type: ignore

    @property
    def order(self) -> int:
        return len(self._nodes)

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def next_node_id(self) -> NodeId:
        return NodeId(self._next_node_id)

    @property
    def next_edge_id(self) -> EdgeId:
        return EdgeId(self._next_edge_id)

    @property
    def nodes(self) -> Tuple[Node, ...]:
        return tuple(self._nodes[node_id] for node_id in sorted(self._nodes))

    @property
    def edges(self) -> Tuple[Hyperedge, ...]:
        return tuple(self._edges[edge_id] for edge_id in sorted(self._edges))

    def node_ids(self) -> Tuple[NodeId, ...]:
        return helpers.sorted_ids(self._nodes)

    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return helpers.sorted_ids(self._edges)

    def has_node(self, node_id: int) -> bool:
        return node_id in self._nodes

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def get_node(self, node_id: NodeId) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNodeError(f'unknown node v{node_id}') from None

    def get_edge(self, edge_id: EdgeId) -> Hyperedge:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise UnknownEdgeError(f'unknown hyperedge e{edge_id}') from None

    def advance_ids(self, next_node_id: int, next_edge_id: int) -> None:
        """Move the id counters forward; counters never move back, so ids are never reused."""
        self._next_node_id = max(self._next_node_id, next_node_id)
        self._next_edge_id = max(self._next_edge_id, next_edge_id)

    # construction

    def add_node(self, label: str = '', features: Optional[Iterable[float]] = None) -> NodeId:
        node = Node(NodeId(self._next_node_id), label, self._node_features(features))
        self._store_node(node)
        return node.id

    def add_simple_edge(self,
                        members: Iterable[NodeId],
                        label: str = '',
                        features: Optional[Iterable[float]] = None,
                        weight: Optional[float] = None) -> EdgeId:
        payload = Simple(self._simple_members(members))
        return self._append_edge(payload, label, features, weight)

    def add_nesting_edge(self,
                         members: Iterable[EdgeId],
                         label: str = '',
                         features: Optional[Iterable[float]] = None,
                         weight: Optional[float] = None) -> EdgeId:
        payload = Nesting(self._nesting_members(members))
        return self._append_edge(payload, label, features, weight)

    def add_directed_edge(self,
                          source: EdgeId,
                          target: EdgeId,
                          label: str = '',
                          features: Optional[Iterable[float]] = None,
                          weight: Optional[float] = None) -> EdgeId:
        self.get_edge(source)
        self.get_edge(target)
        return self._append_edge(Directed(source, target), label, features, weight)

    def insert_node(self, node: Node) -> None:
        """Insert a node keeping its id; used to restore and relabel graphs."""
        if node.id in self._nodes:
            raise DuplicateIdError(f'node id v{node.id} is already taken')
        if node.id < 0:
            raise HypergraphError(f'node id {node.id} must be non-negative')
        self._store_node(dataclasses.replace(node, features=self._node_features(node.features)))

    def insert_edge(self, edge: Hyperedge) -> None:
        """Insert a hyperedge keeping its id; every referenced id must already exist."""
        if edge.id in self._edges:
            raise DuplicateIdError(f'hyperedge id e{edge.id} is already taken')
        if edge.id < 0:
            raise HypergraphError(f'hyperedge id {edge.id} must be non-negative')
        payload = edge.payload
        if isinstance(payload, Simple):
            payload = Simple(self._simple_members(payload.members))
        elif isinstance(payload, Nesting):
            payload = Nesting(self._nesting_members(payload.members))
        else:
            self.get_edge(payload.source)
            self.get_edge(payload.target)
        self._store_edge(Hyperedge(edge.id, payload, edge.label,
                                   self._edge_features(edge.features), self._weight(edge.weight)))

    def _store_node(self, node: Node) -> None:
        self._nodes[node.id] = node
        self._next_node_id = max(self._next_node_id, node.id + 1)

    def _append_edge(self,
                     payload: Payload,
                     label: str,
                     features: Optional[Iterable[float]],
                     weight: Optional[float]) -> EdgeId:
        edge = Hyperedge(EdgeId(self._next_edge_id), payload, label,
                         self._edge_features(features), self._weight(weight))
        self._store_edge(edge)
        return edge.id

    def _store_edge(self, edge: Hyperedge) -> None:
        self._edges[edge.id] = edge
        self._next_edge_id = max(self._next_edge_id, edge.id + 1)
        self._references.add_node(edge.id)
        for referenced in referenced_edges(edge.payload):
            self._references.add_edge(edge.id, referenced)
        if self.check_acyclicity_on_mutation:
            self.check_acyclicity()

    def _node_features(self, features: Optional[Iterable[float]]) -> Tuple[float, ...]:
        values = _finite_features(features, 'node')
        if len(values) != self.node_dim:
            raise FeatureDimensionError(f'node features have length {len(values)}, expected {self.node_dim}')
        return values

    def _edge_features(self, features: Optional[Iterable[float]]) -> Tuple[float, ...]:
        values = _finite_features(features, 'hyperedge')
        if len(values) != self.edge_dim:
            raise FeatureDimensionError(f'hyperedge features have length {len(values)}, expected {self.edge_dim}')
        return values

    def _weight(self, weight: Optional[float]) -> Optional[float]:
        if weight is None:
            return None
        value = helpers.finite_float(weight)
        if value is None or value < 0.0:
            raise InvalidWeightError(f'hyperedge weight must be a finite non-negative number, got {weight!r}')
        return value

    def _simple_members(self, members: Iterable[NodeId]) -> Tuple[NodeId, ...]:
        member_list = list(members)
        if not member_list:
            raise EmptyHyperedgeError('a simple hyperedge needs at least one node')
        duplicates = helpers.find_duplicates(member_list)
        if duplicates:
            raise DuplicateMemberError(f'duplicate node members: {sorted(duplicates)}')
        for node_id in member_list:
            self.get_node(node_id)
        return helpers.sorted_ids(member_list)

    def _nesting_members(self, members: Iterable[EdgeId]) -> Tuple[EdgeId, ...]:
        member_list = list(members)
        if not member_list:
            raise EmptyHyperedgeError('a nesting hyperedge needs at least one member hyperedge')
        duplicates = helpers.find_duplicates(member_list)
        if duplicates:
            raise DuplicateMemberError(f'duplicate hyperedge members: {sorted(duplicates)}')
        for edge_id in member_list:
            self.get_edge(edge_id)
        return helpers.sorted_ids(member_list)

    # queries

    def order_of(self, edge_id: EdgeId) -> int:
        payload = self.get_edge(edge_id).payload
        if isinstance(payload, Directed):
            return 2
        return len(payload.members)

    def leaf_node_set(self, edge_id: EdgeId) -> FrozenSet[NodeId]:
        self.get_edge(edge_id)
        return self._collect_leaves(edge_id, {})

    def substructure(self, edge_id: EdgeId) -> FrozenSet[NodeId]:
        """The node set of a hyperedge, whatever its kind."""
        return self.leaf_node_set(edge_id)

    def leaf_node_sets(self) -> Dict[EdgeId, FrozenSet[NodeId]]:
        memo: Dict[EdgeId, FrozenSet[NodeId]] = {}
        for edge_id in self.edge_ids():
            self._collect_leaves(edge_id, memo)
        return {edge_id: memo[edge_id] for edge_id in self.edge_ids()}

    def _collect_leaves(self, edge_id: EdgeId, memo: Dict[EdgeId, FrozenSet[NodeId]]) -> FrozenSet[NodeId]:
        if edge_id in memo:
            return memo[edge_id]
        payload = self._edges[edge_id].payload
        if isinstance(payload, Simple):
            leaves = frozenset(payload.members)
        else:
            leaves = frozenset().union(*(self._collect_leaves(referenced, memo)
                                         for referenced in referenced_edges(payload)))
        memo[edge_id] = leaves
        return leaves

    def is_nested_in(self, inner: EdgeId, outer: EdgeId) -> bool:
        return self.leaf_node_set(inner) <= self.leaf_node_set(outer)

    def referrers(self, edge_id: EdgeId) -> Tuple[EdgeId, ...]:
        self.get_edge(edge_id)
        return helpers.sorted_ids(self._references.predecessors(edge_id))

    def node_degree(self, node_id: NodeId) -> int:
        self.get_node(node_id)
        return sum(1 for edge in self._edges.values()
                   if isinstance(edge.payload, Simple) and node_id in edge.payload.members)

    def check_acyclicity(self) -> None:
        cycle = helpers.find_cycle(self._references)
        if cycle is not None:
            raise CycleError(cycle)

    def node_feature_matrix(self) -> np.ndarray:
        """X: one row per node, ascending id."""
        if not self._nodes:
            return np.zeros((0, self.node_dim), dtype=float)
        return np.array([node.features for node in self.nodes], dtype=float).reshape(self.order, self.node_dim)

    def edge_feature_matrix(self) -> np.ndarray:
        """U: one row per hyperedge, ascending id."""
        if not self._edges:
            return np.zeros((0, self.edge_dim), dtype=float)
        return np.array([edge.features for edge in self.edges], dtype=float).reshape(self.size, self.edge_dim)

    # transformations

    def reduce_singleton(self, edge_id: EdgeId) -> EdgeId:
        """
        Replace a one-member nesting hyperedge with its member: {e} => e.

        Every reference to the reduced edge is rewritten to point at the member and the
        reduced edge is removed. Chains such as {{e}} collapse completely, so applying the
        reduction to its own result is a no-op. Anything else is returned unchanged.
        """
        current = self.get_edge(edge_id).id
        while True:
            payload = self._edges[current].payload
            if not (isinstance(payload, Nesting) and len(payload.members) == 1):
                return current
            survivor = payload.members[0]
            self._rewrite_references(current, survivor)
            del self._edges[current]
            self._references.remove_node(current)
            logger.debug('reduced singleton nesting hyperedge e%d to e%d', current, survivor)
            current = survivor

    def _rewrite_references(self, old: EdgeId, new: EdgeId) -> None:
        for referrer_id in helpers.sorted_ids(self._references.predecessors(old)):
            referrer = self._edges[referrer_id]
            payload = referrer.payload
            if isinstance(payload, Nesting):
                rewritten: Payload = Nesting(helpers.sorted_ids({new if member == old else member
                                                                 for member in payload.members}))
            elif isinstance(payload, Directed):
                rewritten = Directed(new if payload.source == old else payload.source,
                                     new if payload.target == old else payload.target)
            else:
                continue
            self._edges[referrer_id] = dataclasses.replace(referrer, payload=rewritten)
            self._references.remove_edge(referrer_id, old)
            self._references.add_edge(referrer_id, new)

    def expand_directed(self, edge_id: EdgeId) -> List[EdgeId]:
        """
        Flatten a directed hyperedge tree into its series of endpoints, e.g.
        ((e1, e2), (e3, e4)) => [e1, e2, e3, e4].

        The series can be read as the chain e1 -> e2 -> e3 -> e4 or as the ordered leaves of
        the original pairs; no hyperedges are created either way.
        """
        if not isinstance(self.get_edge(edge_id).payload, Directed):
            raise NotDirectedError(f'hyperedge e{edge_id} is not directed')
        series: List[EdgeId] = []
        self._flatten_directed(edge_id, series)
        return series

    def _flatten_directed(self, edge_id: EdgeId, series: List[EdgeId]) -> None:
        payload = self._edges[edge_id].payload
        if isinstance(payload, Directed):
            self._flatten_directed(payload.source, series)
            self._flatten_directed(payload.target, series)
        else:
            series.append(edge_id)

    def edges_in_dependency_order(self) -> List[EdgeId]:
        """Edge ids ordered so that every edge comes after the edges it references."""
        return helpers.dependency_order({edge_id: referenced_edges(edge.payload)
                                         for edge_id, edge in self._edges.items()})

    def copy(self) -> 'Hypergraph':
        duplicate = Hypergraph(self.node_dim, self.edge_dim, check_acyclicity=self.check_acyclicity_on_mutation)
        duplicate._nodes = dict(self._nodes)
        duplicate._edges = dict(self._edges)
        duplicate._next_node_id = self._next_node_id
        duplicate._next_edge_id = self._next_edge_id
        duplicate._references = self._references.copy()
        return duplicate


def classify(graph: Hypergraph) -> HypergraphKind:
    nested = False
    directed = False
    for edge in graph.edges:
        if isinstance(edge.payload, Nesting):
            nested = True
        elif isinstance(edge.payload, Directed):
            directed = True
    return HypergraphKind(nested=nested, directed=directed)


def permute_nodes(graph: Hypergraph, permutation: Mapping[NodeId, NodeId]) -> Hypergraph:
    """Relabel node ids by a bijection over the node table; edge ids and structure are kept."""
    node_ids = set(graph.node_ids())
    if set(permutation) != node_ids:
        missing = sorted(node_ids - set(permutation))
        unknown = sorted(set(permutation) - node_ids)
        raise PermutationError(f'permutation domain must be the node table (missing {missing}, unknown {unknown})')
    if set(permutation.values()) != node_ids:
        raise PermutationError('permutation is not a bijection over the node table')

    permuted = Hypergraph(graph.node_dim, graph.edge_dim, check_acyclicity=graph.check_acyclicity_on_mutation)
    for node in sorted(graph.nodes, key=lambda node: permutation[node.id]):
        permuted.insert_node(dataclasses.replace(node, id=permutation[node.id]))
    for edge_id in graph.edges_in_dependency_order():
        edge = graph.get_edge(edge_id)
        if isinstance(edge.payload, Simple):
            edge = dataclasses.replace(edge, payload=Simple(tuple(permutation[node_id]
                                                                  for node_id in edge.payload.members)))
        permuted.insert_edge(edge)
    permuted.advance_ids(graph.next_node_id, graph.next_edge_id)
    logger.debug('permuted %d nodes', len(node_ids))
    return permuted


def sub_hypergraph(graph: Hypergraph, edge_ids: Iterable[EdgeId]) -> Hypergraph:
    """
    The sub-hypergraph spanned by ``edge_ids``: those edges, every edge they reference
    transitively, and all leaf nodes. Ids are preserved.
    """
    kept = set()
    pending = list(edge_ids)
    while pending:
        edge_id = pending.pop()
        if edge_id in kept:
            continue
        kept.add(edge_id)
        pending.extend(referenced_edges(graph.get_edge(edge_id).payload))

    leaves = set()
    for edge_id in kept:
        leaves |= graph.leaf_node_set(edge_id)

    sub = Hypergraph(graph.node_dim, graph.edge_dim, check_acyclicity=graph.check_acyclicity_on_mutation)
    for node_id in sorted(leaves):
        sub.insert_node(graph.get_node(node_id))
    for edge_id in graph.edges_in_dependency_order():
        if edge_id in kept:
            sub.insert_edge(graph.get_edge(edge_id))
    sub.advance_ids(graph.next_node_id, graph.next_edge_id)
    return sub
