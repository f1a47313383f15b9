"""
Canonical hypergraph documents.

A document is JSON with a fixed key order, two-space indentation and a trailing newline.
Nodes and hyperedges are listed in ascending id order and reference each other by id, so
equal hypergraphs always serialize to the same text.
"""
import json
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from typing_extensions import TypedDict

from hypernest.core.hypergraph import (
    CycleError, Directed, EdgeId, Hyperedge, Hypergraph, Nesting, Node, NodeId, Payload, Simple,
)
from hypernest.lib import helpers, names

logger = logging.getLogger(__name__)


class DocumentError(Exception):
    pass


class SchemaError(DocumentError):
    pass


class DanglingReferenceError(DocumentError):
    pass


class NodeDocument(TypedDict):
    id: int
    label: str
    features: List[float]


class EdgeDocument(TypedDict, total=False):
    id: int
    kind: str
    members: List[int]
    source: int
    target: int
    label: str
    features: List[float]
    weight: Optional[float]


class CanonicalDocument(TypedDict):
    schema: str
    node_dim: int
    edge_dim: int
    next_node_id: int
    next_edge_id: int
    nodes: List[NodeDocument]
    edges: List[EdgeDocument]


def _edge_document(edge: Hyperedge) -> EdgeDocument:
    document: EdgeDocument = {'id': edge.id, 'kind': edge.kind}
    payload = edge.payload
    if isinstance(payload, Directed):
        document['source'] = payload.source
        document['target'] = payload.target
    else:
        document['members'] = list(payload.members)
    document['label'] = edge.label
    document['features'] = list(edge.features)
    document['weight'] = edge.weight
    return document


def to_document(graph: Hypergraph) -> CanonicalDocument:
    return {
        'schema': names.CANONICAL_SCHEMA,
        'node_dim': graph.node_dim,
        'edge_dim': graph.edge_dim,
        'next_node_id': graph.next_node_id,
        'next_edge_id': graph.next_edge_id,
        'nodes': [{'id': node.id, 'label': node.label, 'features': list(node.features)} for node in graph.nodes],
        'edges': [_edge_document(edge) for edge in graph.edges],
    }


def to_canonical(graph: Hypergraph) -> str:
    return json.dumps(to_document(graph), indent=2, ensure_ascii=False, allow_nan=False) + '\n'


def _field(document: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in document:
        raise SchemaError(f'{where}: missing field {key!r}')
    return document[key]


def _int_field(document: Mapping[str, Any], key: str, where: str) -> int:
    value = _field(document, key, where)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f'{where}: field {key!r} must be a non-negative integer, got {value!r}')
    return value


def _str_field(document: Mapping[str, Any], key: str, where: str) -> str:
    value = _field(document, key, where)
    if not isinstance(value, str):
        raise SchemaError(f'{where}: field {key!r} must be a string, got {value!r}')
    return value


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f'{where}: expected a number, got {value!r}')
    number = helpers.finite_float(value)
    if number is None:
        raise SchemaError(f'{where}: expected a finite number, got {value!r}')
    return number


def _features_field(document: Mapping[str, Any], where: str) -> Tuple[float, ...]:
    value = _field(document, 'features', where)
    if not isinstance(value, list):
        raise SchemaError(f'{where}: field \'features\' must be a list')
    return tuple(_number(item, where) for item in value)


def _ids_field(document: Mapping[str, Any], key: str, where: str) -> List[int]:
    value = _field(document, key, where)
    if not isinstance(value, list):
        raise SchemaError(f'{where}: field {key!r} must be a list of ids')
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int):
            raise SchemaError(f'{where}: field {key!r} must be a list of ids, found {item!r}')
    return value


def _objects_field(document: Mapping[str, Any], key: str) -> List[Mapping[str, Any]]:
    value = _field(document, key, 'document')
    if not isinstance(value, list) or not all(isinstance(item, dict) for item in value):
        raise SchemaError(f'document: field {key!r} must be a list of objects')
    return value


def _read_node(document: Mapping[str, Any], index: int) -> Node:
    where = f'nodes[{index}]'
    return Node(NodeId(_int_field(document, 'id', where)),
                _str_field(document, 'label', where),
                _features_field(document, where))


def _read_payload(document: Mapping[str, Any], where: str) -> Payload:
    kind = _str_field(document, 'kind', where)
    if kind == names.SIMPLE_KIND:
        return Simple(tuple(NodeId(member) for member in _ids_field(document, 'members', where)))
    if kind == names.NESTING_KIND:
        return Nesting(tuple(EdgeId(member) for member in _ids_field(document, 'members', where)))
    if kind == names.DIRECTED_KIND:
        return Directed(EdgeId(_int_field(document, 'source', where)), EdgeId(_int_field(document, 'target', where)))
    raise SchemaError(f'{where}: unknown hyperedge kind {kind!r}, expected one of {sorted(names.EDGE_KINDS)}')


def _read_edge(document: Mapping[str, Any], index: int) -> Hyperedge:
    where = f'edges[{index}]'
    weight = _field(document, 'weight', where)
    return Hyperedge(EdgeId(_int_field(document, 'id', where)),
                     _read_payload(document, where),
                     _str_field(document, 'label', where),
                     _features_field(document, where),
                     None if weight is None else _number(weight, where))


def _check_references(nodes: Sequence[Node], edges: Sequence[Hyperedge]) -> None:
    node_ids = {node.id for node in nodes}
    edge_ids = {edge.id for edge in edges}
    for edge in edges:
        payload = edge.payload
        if isinstance(payload, Simple):
            missing: List[int] = [member for member in payload.members if member not in node_ids]
            prefix = 'v'
        else:
            references = payload.members if isinstance(payload, Nesting) else (payload.source, payload.target)
            missing = [member for member in references if member not in edge_ids]
            prefix = 'e'
        if missing:
            listed = helpers.join_labels([f'{prefix}{member}' for member in missing])
            raise DanglingReferenceError(f'hyperedge e{edge.id} references missing {listed}')


def _references(edges: Sequence[Hyperedge]) -> Dict[EdgeId, Tuple[EdgeId, ...]]:
    references: Dict[EdgeId, Tuple[EdgeId, ...]] = {}
    for edge in edges:
        payload = edge.payload
        if isinstance(payload, Nesting):
            references[edge.id] = payload.members
        elif isinstance(payload, Directed):
            references[edge.id] = (payload.source, payload.target)
        else:
            references[edge.id] = ()
    return references


def _check_acyclic(references: Mapping[EdgeId, Sequence[EdgeId]]) -> None:
    digraph = nx.DiGraph()
    digraph.add_nodes_from(references)
    for referrer, referenced in references.items():
        digraph.add_edges_from((referrer, edge_id) for edge_id in referenced)
    cycle = helpers.find_cycle(digraph)
    if cycle is not None:
        raise CycleError(cycle)


def from_document(document: Union[CanonicalDocument, Mapping[str, Any]], check_acyclicity: bool = False) -> Hypergraph:
    if not isinstance(document, dict):
        raise SchemaError('document: top level must be an object')
    schema = _str_field(document, 'schema', 'document')
    if schema != names.CANONICAL_SCHEMA:
        raise SchemaError(f'document: unsupported schema {schema!r}, expected {names.CANONICAL_SCHEMA!r}')

    nodes = [_read_node(item, index) for index, item in enumerate(_objects_field(document, 'nodes'))]
    edges = [_read_edge(item, index) for index, item in enumerate(_objects_field(document, 'edges'))]
    for table, ids in (('node', [node.id for node in nodes]), ('hyperedge', [edge.id for edge in edges])):
        duplicates = helpers.find_duplicates(ids)
        if duplicates:
            raise SchemaError(f'document: {table} ids listed more than once: {sorted(duplicates)}')
    _check_references(nodes, edges)
    references = _references(edges)
    _check_acyclic(references)

    next_node_id = _int_field(document, 'next_node_id', 'document')
    next_edge_id = _int_field(document, 'next_edge_id', 'document')
    if nodes and next_node_id <= max(node.id for node in nodes):
        raise SchemaError(f'document: next_node_id {next_node_id} is not past the largest node id')
    if edges and next_edge_id <= max(edge.id for edge in edges):
        raise SchemaError(f'document: next_edge_id {next_edge_id} is not past the largest hyperedge id')

    graph = Hypergraph(_int_field(document, 'node_dim', 'document'),
                       _int_field(document, 'edge_dim', 'document'),
                       check_acyclicity=check_acyclicity)
    for node in sorted(nodes, key=lambda node: node.id):
        graph.insert_node(node)
    edges_by_id = {edge.id: edge for edge in edges}
    for edge_id in helpers.dependency_order(references):
        graph.insert_edge(edges_by_id[edge_id])
    graph.advance_ids(next_node_id, next_edge_id)
    logger.debug('loaded canonical document: %d nodes, %d hyperedges', graph.order, graph.size)
    return graph


def from_canonical(text: str, check_acyclicity: bool = False) -> Hypergraph:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f'not a JSON document: {exc}') from exc
    return from_document(document, check_acyclicity=check_acyclicity)
