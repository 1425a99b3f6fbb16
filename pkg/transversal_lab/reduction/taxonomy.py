"""
Classification of the maximal independent sets of a gadget graph.

Every maximal independent set is either regular (it avoids all hub
vertices a, b, ab, bb, r, s, rn, sn) or one of finitely many fixed sets
determined by the graph: P and N, four sets per variable gadget, one
star set per variable and side, and two sets per term.
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..exceptions import PreconditionError, UnclassifiedMISError
from ..graph.independent_sets import is_maximal_independent
from ..graph.labeled_graph import Side, VertexSet
from .gadgets import ReductionOutput

logger = logging.getLogger(__name__)


class MisType(IntEnum):
    """Class numbers of the taxonomy."""

    REGULAR = 1
    SIDE = 2
    VARIABLE_GADGET = 3
    POSITIVE_STAR = 4
    NEGATIVE_STAR = 5
    POSITIVE_TERM_GADGET = 6
    POSITIVE_TERM_SPREAD = 7
    NEGATIVE_TERM_GADGET = 8
    NEGATIVE_TERM_SPREAD = 9


@dataclass(frozen=True)
class Classification:
    """
    Class of one maximal independent set.

    Attributes:
        mis_type: The class
        index: Variable index i or term index l where the class has one
        name: Short name of the member within its class, e.g. 'P' or 'a,bb,xb'
    """

    mis_type: MisType
    index: Optional[int] = None
    name: str = ""

    def __str__(self):
        parts = [f"type {int(self.mis_type)}"]
        if self.index is not None:
            parts.append(f"index {self.index}")
        if self.name:
            parts.append(self.name)
        return " ".join(parts)


_VARIABLE_GADGET_SETS = (
    ("a", "b", "bbar"),
    ("abar", "b", "bbar"),
    ("a", "bbar", "xbar"),
    ("abar", "b", "x"),
)


class Taxonomy:
    """
    The non-regular maximal independent sets of one reduction graph.

    The defining sets are computed from the graph's adjacency and roles,
    so a graph read back from a file classifies the same way as the one
    built from its formula.
    """

    def __init__(self, red: ReductionOutput):
        self.red = red
        self._hubs = red.hubs()
        self._known: Dict[FrozenSet[int], Classification] = {}
        for classification, members in self._defining_sets():
            self._known.setdefault(members.members, classification)

    def _not_adjacent(self, vertex_id: int, kinds: Tuple[str, ...]) -> List[int]:
        graph = self.red.graph
        return [
            other
            for kind in kinds
            for other in self.red.vertices_of(kind)
            if not graph.has_edge(vertex_id, other)
        ]

    def _defining_sets(self) -> List[Tuple[Classification, VertexSet]]:
        red = self.red
        vertex = red.vertex
        sets = [
            (Classification(MisType.SIDE, name="P"), red.graph.side_members(Side.P)),
            (Classification(MisType.SIDE, name="N"), red.graph.side_members(Side.N)),
        ]
        for i in range(1, red.n + 1):
            for kinds in _VARIABLE_GADGET_SETS:
                name = ",".join(kinds)
                sets.append((Classification(MisType.VARIABLE_GADGET, i, name), VertexSet.of(vertex(kind, i) for kind in kinds)))

            others_x = [vertex("x", j) for j in range(1, red.n + 1) if j != i]
            t_avoiding = self._not_adjacent(vertex("xbar", i), ("t",))
            star = [vertex("a", i), vertex("xbar", i)] + others_x + red.vertices_of("y") + t_avoiding
            sets.append((Classification(MisType.POSITIVE_STAR, i, "S+T"), VertexSet.of(star)))

            others_xbar = [vertex("xbar", j) for j in range(1, red.n + 1) if j != i]
            tn_avoiding = self._not_adjacent(vertex("x", i), ("tprime",))
            star = [vertex("abar", i), vertex("x", i)] + others_xbar + red.vertices_of("ybar") + tn_avoiding
            sets.append((Classification(MisType.NEGATIVE_STAR, i, "S'+T'"), VertexSet.of(star)))

        for index in range(1, red.q + 1):
            t = vertex("t", index)
            sets.append((Classification(MisType.POSITIVE_TERM_GADGET, index, "t,r,s"), VertexSet.of([t, vertex("r", index), vertex("s", index)])))
            spread = [t, vertex("s", index)] + red.vertices_of("tprime") + self._not_adjacent(t, ("xbar", "ybar"))
            sets.append((Classification(MisType.POSITIVE_TERM_SPREAD, index, "W+Z"), VertexSet.of(spread)))

        for index in range(1, red.q_prime + 1):
            tn = vertex("tprime", index)
            sets.append((Classification(MisType.NEGATIVE_TERM_GADGET, index, "tn,rn,sn"), VertexSet.of([tn, vertex("rprime", index), vertex("sprime", index)])))
            spread = [tn, vertex("sprime", index)] + red.vertices_of("t") + self._not_adjacent(tn, ("x", "y"))
            sets.append((Classification(MisType.NEGATIVE_TERM_SPREAD, index, "W'+Z'"), VertexSet.of(spread)))
        return sets

    def defining_sets(self) -> List[Tuple[Classification, VertexSet]]:
        """Every non-regular class member with its vertex set."""
        return self._defining_sets()

    def is_regular(self, vertex_set: VertexSet) -> bool:
        return vertex_set.isdisjoint(self._hubs.members)

    def classify(self, vertex_set: VertexSet, check: bool = True) -> Classification:
        """
        Class of a maximal independent set.

        Args:
            vertex_set: A maximal independent set of the reduction graph
            check: Verify maximal independence first

        Returns:
            Classification

        Raises:
            UnclassifiedMISError: When the set fits no class
        """
        if check and not is_maximal_independent(self.red.graph, vertex_set):
            raise PreconditionError("not-maximal-independent", self.red.graph.format_set(vertex_set))
        known = self._known.get(vertex_set.members)
        if known is not None:
            return known
        if self.is_regular(vertex_set):
            return Classification(MisType.REGULAR)
        logger.error("unclassified maximal independent set %s", self.red.graph.format_set(vertex_set))
        raise UnclassifiedMISError(self.red.labels(vertex_set))


def classify_mis(red: ReductionOutput, vertex_set: VertexSet) -> Classification:
    """Class of one maximal independent set of a reduction graph."""
    return Taxonomy(red).classify(vertex_set)
