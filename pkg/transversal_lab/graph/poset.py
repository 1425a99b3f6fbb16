"""
Height-two poset view of a bipartite graph.

Two elements are comparable iff they are joined by an edge, so antichains
are independent sets and fibres (sets meeting every maximal antichain) are
transversals.
"""

from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import PreconditionError, ScaleLimitError
from .labeled_graph import VertexSet


def comparability_graph(pairs: Iterable[Tuple[int, int]], elements: Iterable[int]) -> nx.Graph:
    """Undirected comparability graph of the order given by its cover pairs."""
    graph = nx.Graph()
    graph.add_nodes_from(sorted(elements))
    for lower, upper in pairs:
        if lower not in graph or upper not in graph:
            raise PreconditionError("unknown-element", f"pair ({lower}, {upper})")
        graph.add_edge(lower, upper)
    return graph


def maximal_antichains(
    pairs: Sequence[Tuple[int, int]], elements: Iterable[int], limits: Limits = DEFAULT_LIMITS
) -> List[VertexSet]:
    """All maximal antichains of a height-two poset, in canonical order."""
    graph = comparability_graph(pairs, elements)
    if graph.number_of_nodes() > limits.max_graph_vertices:
        raise ScaleLimitError("poset size", graph.number_of_nodes(), limits.max_graph_vertices)
    if graph.number_of_nodes() == 0:
        return [VertexSet()]
    antichains = sorted(VertexSet.of(members) for members in nx.find_cliques(nx.complement(graph)))
    if len(antichains) > limits.max_mis_count:
        raise ScaleLimitError("maximal antichain count", len(antichains), limits.max_mis_count)
    return antichains


def is_fibre(
    pairs: Sequence[Tuple[int, int]],
    elements: Iterable[int],
    candidate: VertexSet,
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """True iff the candidate meets every maximal antichain."""
    return all(not antichain.isdisjoint(candidate.members) for antichain in maximal_antichains(pairs, elements, limits))
