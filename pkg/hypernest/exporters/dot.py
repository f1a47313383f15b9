"""
Graphviz DOT emission.

Nodes are small filled circles and hyperedges are rounded clusters. Every cluster holds an
invisible anchor point named after its hyperedge, and directed hyperedges are drawn as one
arrow between the anchors of their source and target.

DOT clusters must form a tree, so a node is drawn inside a simple hyperedge only when it
belongs to exactly one; otherwise it stays at the top level and dotted lines join it to each
hyperedge it belongs to. Nesting membership works the same way with dashed lines.
"""
import logging
import re
from typing import Dict, List, Optional, Set, Tuple

from hypernest.core.hypergraph import Directed, EdgeId, Hypergraph, Nesting, NodeId, Simple

logger = logging.getLogger(__name__)

INDENT = '  '
NODE_STYLE = 'shape=circle, style=filled, fillcolor=black, label="", width=0.15, fixedsize=true'
ANCHOR_STYLE = 'shape=point, style=invis, width=0'
CLUSTER_STYLE = 'rounded'
NODE_MEMBERSHIP_STYLE = 'dotted'
EDGE_MEMBERSHIP_STYLE = 'dashed'

DOT_KEYWORDS = {'strict', 'graph', 'digraph', 'subgraph', 'node', 'edge'}
DOT_TOKEN_RE = re.compile(r"""
    (?P<space>\s+)
  | (?P<comment>//[^\n]*|/\*.*?\*/|\#[^\n]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<unterminated>")
  | (?P<edgeop>->|--)
  | (?P<id>[A-Za-z_\x80-\uffff][A-Za-z_0-9\x80-\uffff]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))
  | (?P<punct>[{}\[\];,=:])
""", re.VERBOSE | re.DOTALL)


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"').replace('\n', '\\n') + '"'


def _node_name(node_id: NodeId) -> str:
    return f'v{node_id}'


def _anchor_name(edge_id: EdgeId) -> str:
    return f'e{edge_id}'


def _cluster_name(edge_id: EdgeId) -> str:
    return f'cluster_e{edge_id}'


class _Layout:
    def __init__(self, graph: Hypergraph) -> None:
        self.graph = graph
        self.clustered: List[EdgeId] = [edge.id for edge in graph.edges
                                        if not isinstance(edge.payload, Directed) or graph.referrers(edge.id)]
        clustered = set(self.clustered)

        self.node_parent: Dict[NodeId, EdgeId] = {}
        self.node_links: Dict[NodeId, List[EdgeId]] = {}
        containing: Dict[NodeId, List[EdgeId]] = {node_id: [] for node_id in graph.node_ids()}
        for edge in graph.edges:
            if isinstance(edge.payload, Simple):
                for node_id in edge.payload.members:
                    containing[node_id].append(edge.id)
        for node_id, edge_ids in containing.items():
            if len(edge_ids) == 1:
                self.node_parent[node_id] = edge_ids[0]
            elif edge_ids:
                self.node_links[node_id] = edge_ids
                logger.debug('node v%d belongs to %d simple hyperedges; drawn at top level', node_id, len(edge_ids))

        self.edge_parent: Dict[EdgeId, EdgeId] = {}
        self.edge_links: Dict[EdgeId, List[EdgeId]] = {}
        for edge_id in self.clustered:
            parents = [referrer for referrer in self.graph.referrers(edge_id)
                       if isinstance(graph.get_edge(referrer).payload, Nesting) and referrer in clustered]
            if len(parents) == 1:
                self.edge_parent[edge_id] = parents[0]
            elif parents:
                self.edge_links[edge_id] = parents
                logger.debug('hyperedge e%d is nested in %d hyperedges; drawn at top level', edge_id, len(parents))

    def child_nodes(self, parent: Optional[EdgeId]) -> List[NodeId]:
        return [node_id for node_id in self.graph.node_ids() if self.node_parent.get(node_id) == parent]

    def child_clusters(self, parent: Optional[EdgeId]) -> List[EdgeId]:
        return [edge_id for edge_id in self.clustered if self.edge_parent.get(edge_id) == parent]


def _emit_node(graph: Hypergraph, node_id: NodeId, depth: int, lines: List[str]) -> None:
    label = graph.get_node(node_id).label
    attributes = f' [xlabel={_quote(label)}]' if label else ''
    lines.append(f'{INDENT * depth}{_node_name(node_id)}{attributes};')


def _emit_cluster(layout: _Layout, edge_id: EdgeId, depth: int, lines: List[str]) -> None:
    edge = layout.graph.get_edge(edge_id)
    pad = INDENT * depth
    lines.append(f'{pad}subgraph {_cluster_name(edge_id)} {{')
    lines.append(f'{pad}{INDENT}label={_quote(edge.label or _anchor_name(edge_id))};')
    lines.append(f'{pad}{INDENT}style={CLUSTER_STYLE};')
    lines.append(f'{pad}{INDENT}{_anchor_name(edge_id)} [{ANCHOR_STYLE}];')
    for node_id in layout.child_nodes(edge_id):
        _emit_node(layout.graph, node_id, depth + 1, lines)
    for child in layout.child_clusters(edge_id):
        _emit_cluster(layout, child, depth + 1, lines)
    lines.append(f'{pad}}}')


def to_dot(graph: Hypergraph, name: str = 'hypergraph') -> str:
    layout = _Layout(graph)
    lines = [f'digraph {_quote(name)} {{',
             f'{INDENT}compound=true;',
             f'{INDENT}node [{NODE_STYLE}];']
    for node_id in layout.child_nodes(None):
        _emit_node(graph, node_id, 1, lines)
    for edge_id in layout.child_clusters(None):
        _emit_cluster(layout, edge_id, 1, lines)

    for node_id, edge_ids in sorted(layout.node_links.items()):
        for edge_id in edge_ids:
            lines.append(f'{INDENT}{_node_name(node_id)} -> {_anchor_name(edge_id)} '
                         f'[style={NODE_MEMBERSHIP_STYLE}, arrowhead=none];')
    for edge_id, parents in sorted(layout.edge_links.items()):
        for parent in parents:
            lines.append(f'{INDENT}{_anchor_name(edge_id)} -> {_anchor_name(parent)} '
                         f'[style={EDGE_MEMBERSHIP_STYLE}, arrowhead=none, '
                         f'ltail={_cluster_name(edge_id)}, lhead={_cluster_name(parent)}];')

    for edge in graph.edges:
        payload = edge.payload
        if not isinstance(payload, Directed):
            continue
        attributes = [f'label={_quote(edge.label)}'] if edge.label else []
        if payload.source != payload.target:
            attributes += [f'ltail={_cluster_name(payload.source)}', f'lhead={_cluster_name(payload.target)}']
        suffix = f' [{", ".join(attributes)}]' if attributes else ''
        lines.append(f'{INDENT}{_anchor_name(payload.source)} -> {_anchor_name(payload.target)}{suffix};')

    lines.append('}')
    return '\n'.join(lines) + '\n'


def check_dot(text: str) -> List[str]:
    """
    Minimal DOT well-formedness check: one top-level graph, balanced braces and brackets,
    terminated strings and every id used in an edge statement declared as a node.
    Returns the problems found; an empty list means the text is well formed.
    """
    problems: List[str] = []
    tokens: List[Tuple[str, str]] = []
    position = 0
    while position < len(text):
        match = DOT_TOKEN_RE.match(text, position)
        if match is None:
            problems.append(f'unexpected character {text[position]!r} at offset {position}')
            position += 1
            continue
        kind = match.lastgroup or ''
        if kind == 'unterminated':
            problems.append(f'unterminated string at offset {position}')
            break
        if kind not in ('space', 'comment'):
            tokens.append((kind, match.group()))
        position = match.end()

    values = [value for _, value in tokens]
    start = 1 if values[:1] == ['strict'] else 0
    if values[start:start + 1] not in (['digraph'], ['graph']):
        problems.append('text does not start with a graph or digraph statement')

    declared: Set[str] = set()
    used: List[str] = []
    braces = 0
    brackets = 0
    closed_at: Optional[int] = None
    for index, (kind, value) in enumerate(tokens):
        if value == '{':
            if closed_at is not None:
                problems.append('more than one top-level graph')
                closed_at = None
            braces += 1
        elif value == '}':
            braces -= 1
            if braces < 0:
                problems.append('unbalanced closing brace')
                braces = 0
            elif braces == 0:
                closed_at = index
        elif value == '[':
            brackets += 1
        elif value == ']':
            brackets -= 1
            if brackets < 0:
                problems.append('unbalanced closing bracket')
                brackets = 0
        elif kind in ('id', 'string') and brackets == 0 and braces > 0 and value not in DOT_KEYWORDS:
            preceding = tokens[index - 1] if index > 0 else None
            following = tokens[index + 1] if index + 1 < len(tokens) else None
            previous = preceding[1] if preceding is not None else None
            if previous in ('subgraph', '=') or (following is not None and following[1] == '='):
                continue
            in_edge = any(neighbour is not None and neighbour[0] == 'edgeop' for neighbour in (preceding, following))
            if in_edge:
                used.append(value)
            elif previous in ('{', '}', ';'):
                declared.add(value)

    if braces:
        problems.append('unbalanced opening brace')
    if brackets:
        problems.append('unbalanced opening bracket')
    if closed_at is None and not any('brace' in problem for problem in problems):
        problems.append('graph body is never closed')
    elif closed_at is not None and closed_at != len(tokens) - 1:
        problems.append('content after the closing brace of the graph')
    for name in sorted(set(used) - declared):
        problems.append(f'edge statement uses undeclared node {name}')
    return problems
