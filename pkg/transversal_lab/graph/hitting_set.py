"""
Minimum transversals by exact minimum hitting set over the enumerated
maximal independent sets.

Sets are Python int bitmasks over the graph's id order, so bit order and
id order agree and lexicographic order on sorted id tuples is the
include-first depth-first order over bit positions.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import ScaleLimitError
from .independent_sets import enumerate_mis
from .labeled_graph import LabeledBipartiteGraph, VertexSet

logger = logging.getLogger(__name__)

INFEASIBLE = "INFEASIBLE-WITHIN-LIMIT"


@dataclass(frozen=True)
class TransversalSearch:
    """
    Result of a minimum transversal search.

    Attributes:
        found: False when no transversal of size at most limit exists
        size: Optimum size when found
        vertex_set: Lexicographically least optimum when found
        limit: The size limit the search ran with, if any
    """

    found: bool
    size: Optional[int] = None
    vertex_set: Optional[VertexSet] = None
    limit: Optional[int] = None


def _bits(mask: int) -> List[int]:
    positions = []
    while mask:
        low = mask & -mask
        positions.append(low.bit_length() - 1)
        mask ^= low
    return positions


def _packing_bound(family: Sequence[int]) -> int:
    """Size of a greedy packing of pairwise disjoint sets, a lower bound on any hitting set."""
    used = 0
    count = 0
    for member in sorted(family, key=lambda item: bin(item).count("1")):
        if member & used == 0:
            used |= member
            count += 1
    return count


def _greedy_hitting_set(family: Sequence[int]) -> int:
    chosen = 0
    unhit = list(family)
    while unhit:
        counts = {}
        for member in unhit:
            for position in _bits(member):
                counts[position] = counts.get(position, 0) + 1
        best = min(counts, key=lambda position: (-counts[position], position))
        chosen |= 1 << best
        unhit = [member for member in unhit if not member >> best & 1]
    return chosen


class _OptimumSearch:
    """Branch and bound for the optimum size: unit forcing, then most-frequent-element branching."""

    def __init__(self, bound: int, incumbent: Optional[int]):
        self.best_size = bound
        self.best_mask = incumbent
        self.nodes = 0

    def run(self, unhit: List[int], chosen: int, size: int) -> None:
        self.nodes += 1
        if not unhit:
            if size < self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return
        if size + _packing_bound(unhit) >= self.best_size:
            return

        for member in unhit:
            if member & (member - 1) == 0:
                self.run([other for other in unhit if not other & member], chosen | member, size + 1)
                return

        counts = {}
        for member in unhit:
            for position in _bits(member):
                counts[position] = counts.get(position, 0) + 1
        pivot = min(counts, key=lambda position: (-counts[position], position))
        bit = 1 << pivot

        self.run([member for member in unhit if not member & bit], chosen | bit, size + 1)
        excluded = [member & ~bit for member in unhit]
        if all(excluded):
            self.run(excluded, chosen, size)


def _lex_least(family: Sequence[int], size: int, width: int) -> Optional[int]:
    """
    Lexicographically least hitting set of the given size.

    Include-first search over positions in increasing order. A position is
    only tried when it hits a still-unhit set: at optimum size every member
    of a solution hits some set no smaller member hits.
    """

    def search(position: int, unhit: List[int], chosen: int, used: int) -> Optional[int]:
        if not unhit:
            return chosen
        if used == size or position == width:
            return None
        reachable = ~((1 << position) - 1)
        remaining = [member & reachable for member in unhit]
        if not all(remaining) or used + _packing_bound(remaining) > size:
            return None
        bit = 1 << position
        if any(member & bit for member in unhit):
            found = search(position + 1, [member for member in unhit if not member & bit], chosen | bit, used + 1)
            if found is not None:
                return found
        return search(position + 1, unhit, chosen, used)

    return search(0, list(family), 0, 0)


def min_transversal(
    graph: LabeledBipartiteGraph,
    limit: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
) -> TransversalSearch:
    """
    Exact minimum transversal.

    Enumerates the maximal independent sets, then solves minimum hitting set
    by branch and bound. Among optimum solutions the lexicographically least
    is returned.

    Args:
        graph: Enumeration-scale graph
        limit: Report infeasible when the optimum exceeds this size
        limits: Scale limits

    Returns:
        TransversalSearch; not found for the zero-vertex graph
    """
    if graph.num_vertices == 0:
        return TransversalSearch(False, limit=limit)
    family = sorted({graph.mask_of(members) for members in enumerate_mis(graph, limits)})

    greedy = _greedy_hitting_set(family)
    greedy_size = bin(greedy).count("1")
    if limit is not None and greedy_size > limit:
        search = _OptimumSearch(limit + 1, None)
    else:
        search = _OptimumSearch(greedy_size, greedy)
    search.run(family, 0, 0)
    logger.debug(
        "hitting set search: %d sets, greedy %d, optimum %s after %d nodes",
        len(family), greedy_size, search.best_mask is not None and bin(search.best_mask).count("1"), search.nodes,
    )

    if search.best_mask is None:
        return TransversalSearch(False, limit=limit)
    size = bin(search.best_mask).count("1")
    if limit is not None and size > limit:
        return TransversalSearch(False, limit=limit)
    best = _lex_least(family, size, graph.num_vertices)
    if best is None:
        best = search.best_mask
    return TransversalSearch(True, size, graph.set_of(best), limit)


def brute_force_min_transversal(graph: LabeledBipartiteGraph, limits: Limits = DEFAULT_LIMITS) -> TransversalSearch:
    """
    Minimum transversal by trying every subset in increasing size and lexicographic order.

    Used to certify min_transversal; only for small graphs.
    """
    if graph.num_vertices > limits.max_graph_vertices:
        raise ScaleLimitError("graph vertex count", graph.num_vertices, limits.max_graph_vertices)
    if graph.num_vertices == 0:
        return TransversalSearch(False)
    family = [graph.mask_of(members) for members in enumerate_mis(graph, limits)]
    for size in range(graph.num_vertices + 1):
        for candidate in itertools.combinations(graph.vertex_ids, size):
            mask = graph.mask_of(candidate)
            if all(member & mask for member in family):
                return TransversalSearch(True, size, VertexSet.of(candidate))
    return TransversalSearch(False)
