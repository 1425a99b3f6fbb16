"""
The two directions of the reduction as executable maps between
x-assignments and canonical transversals, plus the disjoint family of
maximal independent sets that forces every transversal to size k.
"""

import logging
from typing import Dict, List

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import PreconditionError
from ..graph.independent_sets import is_transversal
from ..graph.labeled_graph import VertexSet
from ..logic.formula import Assignment
from .gadgets import ReductionOutput

logger = logging.getLogger(__name__)


def _term_vertices(red: ReductionOutput) -> List[int]:
    return red.vertices_of("t") + red.vertices_of("tprime")


def transversal_from_assignment(red: ReductionOutput, mu: Assignment) -> VertexSet:
    """
    The transversal of size k read off an x-assignment.

    All term vertices, plus {b_i, xb_i} where mu(x_i) is true and
    {bb_i, x_i} where it is false.

    Args:
        red: Reduction output
        mu: Assignment binding x_1..x_n

    Returns:
        VertexSet of size exactly k
    """
    members = set(_term_vertices(red))
    for i in range(1, red.n + 1):
        if not mu.binds(i):
            raise PreconditionError("partial-assignment", f"x{i} is unbound")
        if mu.value(i):
            members.update((red.vertex("b", i), red.vertex("xbar", i)))
        else:
            members.update((red.vertex("bbar", i), red.vertex("x", i)))
    return VertexSet.of(members)


def canonicalize(
    red: ReductionOutput, vertex_set: VertexSet, limits: Limits = DEFAULT_LIMITS
) -> VertexSet:
    """
    Canonical transversal of size exactly k derived from any transversal of size at most k.

    Keeps every term vertex and, per variable, {bb_i, x_i} when x_i is in
    the input and {b_i, xb_i} otherwise. With limits.strict_canonicalize
    the input is first checked to be a transversal.
    """
    red.graph.check_members(vertex_set)
    if len(vertex_set) > red.k:
        raise PreconditionError("too-large", f"|X| = {len(vertex_set)} exceeds k = {red.k}")
    if limits.strict_canonicalize and not is_transversal(red.graph, vertex_set, limits).ok:
        raise PreconditionError("not-transversal", "canonicalize needs a transversal")

    members = set(_term_vertices(red))
    for i in range(1, red.n + 1):
        if red.vertex("x", i) in vertex_set:
            members.update((red.vertex("bbar", i), red.vertex("x", i)))
        else:
            members.update((red.vertex("b", i), red.vertex("xbar", i)))
    logger.debug("canonicalized %s to %s", red.labels(vertex_set), red.labels(members))
    return VertexSet.of(members)


def is_canonical(red: ReductionOutput, vertex_set: VertexSet) -> bool:
    """True iff the set has size k, holds every term vertex and one variable pair per i."""
    if len(vertex_set) != red.k:
        return False
    if any(vertex_id not in vertex_set for vertex_id in _term_vertices(red)):
        return False
    for i in range(1, red.n + 1):
        false_pair = {red.vertex("bbar", i), red.vertex("x", i)} <= vertex_set.members
        true_pair = {red.vertex("b", i), red.vertex("xbar", i)} <= vertex_set.members
        if false_pair == true_pair:
            return False
    return True


def assignment_from_transversal(red: ReductionOutput, vertex_set: VertexSet) -> Assignment:
    """
    The x-assignment of a canonical transversal: x_i is true iff x_i is not in the set.

    Raises:
        PreconditionError: When the set is not canonical
    """
    red.graph.check_members(vertex_set)
    if not is_canonical(red, vertex_set):
        raise PreconditionError("non-canonical", "expected a canonical transversal of size k")
    return Assignment.for_x([red.vertex("x", i) not in vertex_set for i in range(1, red.n + 1)])


def disjoint_witness_family(red: ReductionOutput) -> List[VertexSet]:
    """
    k pairwise disjoint maximal independent sets.

    {a_i, bb_i, xb_i} and {ab_i, b_i, x_i} per variable, then {t, r, s} per
    positive term and {tn, rn, sn} per negative term. Any transversal meets
    each of them, so none is smaller than k.
    """
    family = []
    for i in range(1, red.n + 1):
        family.append(VertexSet.of(red.vertex(kind, i) for kind in ("a", "bbar", "xbar")))
        family.append(VertexSet.of(red.vertex(kind, i) for kind in ("abar", "b", "x")))
    for index in range(1, red.q + 1):
        family.append(VertexSet.of(red.vertex(kind, index) for kind in ("t", "r", "s")))
    for index in range(1, red.q_prime + 1):
        family.append(VertexSet.of(red.vertex(kind, index) for kind in ("tprime", "rprime", "sprime")))
    return family


def regular_mis_assignment(red: ReductionOutput, vertex_set: VertexSet) -> Dict[int, bool]:
    """
    Literal vertices of a set read as a partial assignment over all n + m variables.

    x_i (y_j) in the set makes the variable true, xb_i (yb_j) makes it false;
    variables with neither vertex are left out.
    """
    values: Dict[int, bool] = {}
    for vertex_id in vertex_set:
        role = red.role(vertex_id)
        if role.kind in ("x", "xbar"):
            values[role.index] = role.kind == "x"
        elif role.kind in ("y", "ybar"):
            values[red.n + role.index] = role.kind == "y"
    return values
