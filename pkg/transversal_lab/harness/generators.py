"""
Seeded instance generators.

All generators draw from random.Random(seed), CPython's MT19937 seeded by
init_by_array over the seed's 32-bit words, and consume the stream in a
fixed order: term by term, three variable draws per term (randint over
1..n+m), then for mixed-polarity formulas one polarity draw per literal
(random() < 0.5 means negated). Equal parameters and seed give equal
instances.
"""

import logging
import random
from typing import List

import networkx as nx

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import GeneratorInfeasibleError, PreconditionError
from ..graph.labeled_graph import LabeledBipartiteGraph, Side, Vertex
from ..logic.formula import Literal, Q3DNF, Term, is_nice
from ..logic.normalize import add_niceness_terms, pad_terms

logger = logging.getLogger(__name__)


def _draw_variables(rng: random.Random, count: int) -> List[int]:
    return [rng.randint(1, count) for _ in range(3)]


def gen_q3dnf(n: int, m: int, terms: int, seed: int) -> Q3DNF:
    """
    Random width-3 formula with arbitrary polarities.

    Args:
        n: Existential variables
        m: Universal variables
        terms: Number of terms, at least 1
        seed: Generator seed

    Returns:
        Q3DNF
    """
    if terms < 1:
        raise PreconditionError("no-terms", "the generator needs terms >= 1")
    if n + m < 1:
        raise PreconditionError("no-variables", "the generator needs n + m >= 1")
    rng = random.Random(seed)
    drawn = []
    for _ in range(terms):
        variables = _draw_variables(rng, n + m)
        drawn.append(Term(tuple(Literal(variable, rng.random() >= 0.5) for variable in variables)))
    return Q3DNF(n, m, tuple(drawn))


def _draw_monotone(rng: random.Random, n: int, m: int, q: int, qprime: int) -> Q3DNF:
    drawn = []
    for _ in range(q):
        drawn.append(Term(tuple(Literal(variable, True) for variable in _draw_variables(rng, n + m))))
    for _ in range(qprime):
        drawn.append(Term(tuple(Literal(variable, False) for variable in _draw_variables(rng, n + m))))
    return Q3DNF(n, m, tuple(drawn))


def nice_counts_possible(n: int, m: int, q: int, qprime: int) -> bool:
    """
    Whether some monotone formula with these counts is nice.

    With a universal variable every term can avoid the whole x-block. With
    m = 0 each side needs two terms (one term cannot avoid a variable it
    alone mentions) and n >= 2 (every term mentions some x).
    """
    if m >= 1:
        return True
    return n >= 2 and q >= 2 and qprime >= 2


def gen_nice_monotone(
    n: int, m: int, q: int, qprime: int, seed: int, limits: Limits = DEFAULT_LIMITS
) -> Q3DNF:
    """
    Random nice monotone width-3 formula with q positive and qprime negative terms.

    Positive terms come first. Draws repeat until the formula is nice, at
    most limits.generator_retry_cap times; after that the last draw is
    repaired with add_niceness_terms and padded, which appends dummy terms
    and universal variables.

    Raises:
        GeneratorInfeasibleError: When no nice formula has these counts
    """
    if n < 1 or q < 1 or qprime < 1 or m < 0:
        raise PreconditionError("bad-counts", f"need n >= 1, m >= 0, q >= 1, qprime >= 1; got {n}, {m}, {q}, {qprime}")
    rng = random.Random(seed)
    formula = None
    for attempt in range(max(1, limits.generator_retry_cap)):
        formula = _draw_monotone(rng, n, m, q, qprime)
        if is_nice(formula).nice:
            logger.debug("nice formula after %d draws (seed %d)", attempt + 1, seed)
            return formula
    if not nice_counts_possible(n, m, q, qprime):
        raise GeneratorInfeasibleError(
            f"no nice monotone formula has n={n}, m={m}, q={q}, qprime={qprime} "
            f"(gave up after {limits.generator_retry_cap} draws)"
        )
    logger.info("retry cap %d reached for seed %d; repairing the last draw", limits.generator_retry_cap, seed)
    return pad_terms(add_niceness_terms(formula))


def gen_graph(vertices: int, edge_probability: float, seed: int) -> LabeledBipartiteGraph:
    """Erdos-Renyi random graph with labels v0, v1, ... and unassigned sides."""
    sample = nx.gnp_random_graph(vertices, edge_probability, seed=seed)
    return LabeledBipartiteGraph(
        [Vertex(node, f"v{node}", Side.U) for node in sorted(sample.nodes)],
        sample.edges,
    )
