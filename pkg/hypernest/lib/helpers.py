import math
import re
from typing import (
    Hashable, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, TypeVar,
)

import networkx as nx

IdT = TypeVar('IdT', bound=int)
ItemT = TypeVar('ItemT', bound=Hashable)

IDENTIFIER_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')

TRUE_STRINGS = {'1', 'true', 'yes', 'on'}
FALSE_STRINGS = {'0', 'false', 'no', 'off'}


def sorted_ids(ids: Iterable[IdT]) -> Tuple[IdT, ...]:
    return tuple(sorted(ids))


def find_duplicates(items: Iterable[ItemT]) -> List[ItemT]:
    seen: Set[ItemT] = set()
    duplicates: List[ItemT] = []
    for item in items:
        if item in seen and item not in duplicates:
            duplicates.append(item)
        seen.add(item)
    return duplicates


def finite_float(value: float) -> Optional[float]:
    """``value`` as a float, or None when it has no finite float value."""
    try:
        number = float(value)
    except OverflowError:
        return None
    return number if math.isfinite(number) else None


def coerce_features(values: Optional[Iterable[float]]) -> Tuple[float, ...]:
    if values is None:
        return ()
    return tuple(float(value) for value in values)


def is_identifier(text: str) -> bool:
    return IDENTIFIER_RE.fullmatch(text) is not None


def parse_bool(value: str) -> Optional[bool]:
    lowered = value.strip().lower()
    if lowered in TRUE_STRINGS:
        return True
    if lowered in FALSE_STRINGS:
        return False
    return None


def find_cycle(digraph: nx.DiGraph) -> Optional[List[int]]:
    """Return the vertices of one cycle of ``digraph`` in traversal order, or None."""
    try:
        cycle_edges = nx.find_cycle(digraph, orientation='original')
    except nx.NetworkXNoCycle:
        return None
    return [edge[0] for edge in cycle_edges]


def dependency_order(references: Mapping[IdT, Iterable[IdT]]) -> List[IdT]:
    """
    Order ids so that each id comes after every id it references; ties are broken by
    ascending id. Raises ``nx.NetworkXUnfeasible`` when the references contain a cycle.
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(references)
    for referrer, referenced_ids in references.items():
        for referenced in referenced_ids:
            digraph.add_edge(referenced, referrer)
    return list(nx.lexicographical_topological_sort(digraph))


def join_labels(labels: Sequence[str], separator: str = ', ') -> str:
    return separator.join(labels)
