from typing import Dict, List

import hypothesis.strategies as st

from hypernest.core.hypergraph import EdgeId, Hypergraph, NodeId
from hypernest.lib import names

labels = st.text(alphabet='abcdefgh', max_size=3)
weights = st.none() | st.floats(min_value=0.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def hypergraphs(draw, max_nodes: int = 8, max_edges: int = 12, node_dim: int = 0, edge_dim: int = 0) -> Hypergraph:
    """Random valid hypergraphs mixing all three hyperedge kinds."""
    features = st.lists(st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False),
                        min_size=node_dim, max_size=node_dim)
    edge_features = st.lists(st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False),
                             min_size=edge_dim, max_size=edge_dim)
    graph = Hypergraph(node_dim=node_dim, edge_dim=edge_dim)
    node_ids: List[NodeId] = [graph.add_node(draw(labels), draw(features))
                              for _ in range(draw(st.integers(min_value=0, max_value=max_nodes)))]
    edge_ids: List[EdgeId] = []
    for _ in range(draw(st.integers(min_value=0, max_value=max_edges))):
        kinds = []
        if node_ids:
            kinds.append(names.SIMPLE_KIND)
        if edge_ids:
            kinds += [names.NESTING_KIND, names.DIRECTED_KIND]
        if not kinds:
            break
        kind = draw(st.sampled_from(kinds))
        label, weight = draw(labels), draw(weights)
        if kind == names.SIMPLE_KIND:
            members = draw(st.lists(st.sampled_from(node_ids), min_size=1, max_size=4, unique=True))
            edge_ids.append(graph.add_simple_edge(members, label, draw(edge_features), weight))
        elif kind == names.NESTING_KIND:
            members = draw(st.lists(st.sampled_from(edge_ids), min_size=1, max_size=3, unique=True))
            edge_ids.append(graph.add_nesting_edge(members, label, draw(edge_features), weight))
        else:
            source = draw(st.sampled_from(edge_ids))
            target = draw(st.sampled_from(edge_ids))
            edge_ids.append(graph.add_directed_edge(source, target, label, draw(edge_features), weight))
    return graph


@st.composite
def node_bijections(draw, graph: Hypergraph) -> Dict[NodeId, NodeId]:
    node_ids = list(graph.node_ids())
    return dict(zip(node_ids, draw(st.permutations(node_ids))))
