"""
Exact maximal-independent-set machinery.

Enumeration runs networkx's pivoting Bron-Kerbosch (find_cliques) on the
complement graph and returns sets in canonical order: each set sorted by
id, the list sorted lexicographically.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional

import networkx as nx

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import ScaleLimitError
from .labeled_graph import LabeledBipartiteGraph, VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransversalCheck:
    """Whether a set meets every maximal independent set, with a missed one otherwise."""

    ok: bool
    counterexample: Optional[VertexSet] = None


def _check_vertex_limit(graph: LabeledBipartiteGraph, limits: Limits) -> None:
    if graph.num_vertices > limits.max_graph_vertices:
        raise ScaleLimitError("graph vertex count", graph.num_vertices, limits.max_graph_vertices)


def _collect(sets: Iterable[Iterable[int]], limits: Limits) -> List[VertexSet]:
    collected = []
    for members in sets:
        collected.append(VertexSet.of(members))
        if len(collected) > limits.max_mis_count:
            raise ScaleLimitError("maximal independent set count", len(collected), limits.max_mis_count)
    return sorted(collected)


def _independent_sets_of(graph: nx.Graph) -> Iterator[List[int]]:
    """Maximal independent sets of a networkx graph; the empty graph has the empty set."""
    if graph.number_of_nodes() == 0:
        return iter([[]])
    return nx.find_cliques(nx.complement(graph))


def is_independent(graph: LabeledBipartiteGraph, vertex_set: VertexSet) -> bool:
    """True iff no edge joins two members."""
    graph.check_members(vertex_set)
    mask = graph.mask_of(vertex_set)
    return all(graph.neighbor_mask(vertex_id) & mask == 0 for vertex_id in vertex_set)


def is_maximal_independent(graph: LabeledBipartiteGraph, vertex_set: VertexSet) -> bool:
    """True iff the set is independent and every other vertex has a neighbor in it."""
    if not is_independent(graph, vertex_set):
        return False
    mask = graph.mask_of(vertex_set)
    return all(
        graph.neighbor_mask(vertex_id) & mask
        for vertex_id in graph.vertex_ids
        if vertex_id not in vertex_set
    )


def enumerate_mis(graph: LabeledBipartiteGraph, limits: Limits = DEFAULT_LIMITS) -> List[VertexSet]:
    """
    All maximal independent sets, each once, in canonical order.

    Args:
        graph: Graph with at most limits.max_graph_vertices vertices
        limits: Scale limits

    Returns:
        List of VertexSet; [empty set] for the zero-vertex graph

    Raises:
        ScaleLimitError: When the graph or the number of sets is beyond the limits
    """
    _check_vertex_limit(graph, limits)
    result = _collect(_independent_sets_of(graph.nx_graph), limits)
    logger.debug("enumerated %d maximal independent sets on %d vertices", len(result), graph.num_vertices)
    return result


def enumerate_mis_containing(
    graph: LabeledBipartiteGraph, vertex_id: int, limits: Limits = DEFAULT_LIMITS
) -> List[VertexSet]:
    """
    Maximal independent sets that contain a given vertex.

    These are exactly {v} joined with the maximal independent sets of the
    graph with v's closed neighborhood removed, so only that smaller graph is
    enumerated.
    """
    closed = graph.neighbors(vertex_id) | {vertex_id}
    rest = graph.nx_graph.subgraph(node for node in graph.vertex_ids if node not in closed)
    if rest.number_of_nodes() > limits.max_graph_vertices:
        raise ScaleLimitError("graph vertex count", rest.number_of_nodes(), limits.max_graph_vertices)
    return _collect((list(members) + [vertex_id] for members in _independent_sets_of(rest)), limits)


def maximal_cliques(graph: LabeledBipartiteGraph, limits: Limits = DEFAULT_LIMITS) -> List[VertexSet]:
    """All maximal cliques in canonical order; [empty set] for the zero-vertex graph."""
    _check_vertex_limit(graph, limits)
    if graph.num_vertices == 0:
        return [VertexSet()]
    return _collect(nx.find_cliques(graph.nx_graph), limits)


def is_transversal(
    graph: LabeledBipartiteGraph,
    vertex_set: VertexSet,
    limits: Limits = DEFAULT_LIMITS,
    method: str = "direct",
) -> TransversalCheck:
    """
    Check that a vertex set meets every maximal independent set.

    The direct method enumerates the maximal independent sets of the graph
    induced on V - X and keeps those that are still maximal in the whole
    graph (every vertex of X has a neighbor among them). The enumerate
    method intersects X with the full enumeration. Both return the least
    missed set in canonical order.

    Args:
        graph: The graph
        vertex_set: Candidate transversal X
        limits: Scale limits
        method: "direct" or "enumerate"

    Returns:
        TransversalCheck with a disjoint maximal independent set when not ok
    """
    graph.check_members(vertex_set)
    _check_vertex_limit(graph, limits)
    if method == "enumerate":
        missed = [members for members in enumerate_mis(graph, limits) if members.isdisjoint(vertex_set.members)]
        return TransversalCheck(not missed, missed[0] if missed else None)
    if method != "direct":
        raise ValueError(f"unknown transversal check method {method!r}")

    rest = graph.nx_graph.subgraph(node for node in graph.vertex_ids if node not in vertex_set)
    masks = [graph.neighbor_mask(vertex_id) for vertex_id in vertex_set]
    missed = []
    for members in _collect(_independent_sets_of(rest), limits):
        members_mask = graph.mask_of(members)
        if all(mask & members_mask for mask in masks):
            missed.append(members)
            break
    return TransversalCheck(not missed, missed[0] if missed else None)
