"""
Transformation of arbitrary formulas into nice monotone width-3 form.

The pipeline runs monotonize -> add_niceness_terms -> pad_terms and then
verifies its output. Each pass preserves the truth value and only ever
appends fresh universal variables; the existential block is untouched.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..exceptions import InvariantError, PreconditionError
from .formula import Literal, Q3DNF, Term, TermPolarity, is_monotone, is_nice, polarity_split

logger = logging.getLogger(__name__)

PADDING_POLICY = "duplicate-literal"


@dataclass(frozen=True)
class NormalizationTrace:
    """
    What the pipeline changed.

    Attributes:
        split_variables: Fresh universal ids introduced by monotonize, one per mixed term
        niceness_variables: Fresh universal (z, w) pairs introduced by the niceness repair
        repaired: The (variable, side) deficiencies that were repaired
        padded_terms: Number of short terms padded to three slots
        padding_policy: Name of the padding policy
    """

    split_variables: Tuple[int, ...] = ()
    niceness_variables: Tuple[Tuple[int, int], ...] = ()
    repaired: Tuple[Tuple[int, str], ...] = ()
    padded_terms: int = 0
    padding_policy: str = PADDING_POLICY

    def to_comments(self) -> List[str]:
        """Render as comment lines for the formula file."""
        pairs = " ".join(f"{z},{w}" for z, w in self.niceness_variables) or "-"
        repaired = " ".join(f"{variable}:{side}" for variable, side in self.repaired) or "-"
        split = " ".join(str(variable) for variable in self.split_variables) or "-"
        return [
            f"split-variables: {split}",
            f"niceness-variables: {pairs}",
            f"repaired: {repaired}",
            f"padded-terms: {self.padded_terms}",
            f"padding-policy: {self.padding_policy}",
        ]


@dataclass(frozen=True)
class NormalizationResult:
    formula: Q3DNF
    trace: NormalizationTrace


def split_mixed_term(term: Term, fresh_universal: int) -> Tuple[Term, Term]:
    """
    Split a mixed term around a fresh universal variable d.

    (a & b & -c) is equivalent, for all d, to (a & b & d) | (-d & -c).

    Args:
        term: A term with both polarities
        fresh_universal: Id of an unused universal variable

    Returns:
        Tuple of (positive literals & d, -d & negative literals)
    """
    if term.polarity is not TermPolarity.MIXED:
        raise PreconditionError("term-not-mixed", f"{term} is {term.polarity.value}")
    distinct = term.distinct_literals
    positives = tuple(literal for literal in distinct if literal.positive)
    negatives = tuple(literal for literal in distinct if not literal.positive)
    d = Literal(fresh_universal, True)
    return Term(positives + (d,)), Term((d.negated(),) + negatives)


def monotonize(formula: Q3DNF) -> Q3DNF:
    """Split every mixed term, in term order, each around its own fresh universal."""
    return _monotonize(formula)[0]


def _monotonize(formula: Q3DNF) -> Tuple[Q3DNF, Tuple[int, ...]]:
    next_id = formula.num_variables + 1
    terms: List[Term] = []
    fresh: List[int] = []
    for term in formula.terms:
        if term.polarity is TermPolarity.MIXED:
            first, second = split_mixed_term(term, next_id)
            logger.debug("split %s around %d into %s, %s", term, next_id, first, second)
            terms.extend((first, second))
            fresh.append(next_id)
            next_id += 1
        else:
            terms.append(term)
    if not fresh:
        return formula, ()
    return formula.with_terms(terms, extra_universals=len(fresh)), tuple(fresh)


def add_niceness_terms(formula: Q3DNF) -> Q3DNF:
    """
    Repair every niceness deficiency with a pair of dummy terms.

    A missing negative side for x_i gains (x_i & z & w) and (-z & -w);
    a missing positive side gains (-x_i & -z & -w) and (z & w), with z, w
    fresh universals. Deficiencies are repaired by ascending variable id,
    negative side first.
    """
    return _add_niceness_terms(formula)[0]


def _add_niceness_terms(formula: Q3DNF) -> Tuple[Q3DNF, Tuple[Tuple[int, int], ...], Tuple[Tuple[int, str], ...]]:
    if not is_monotone(formula):
        raise PreconditionError("non-monotone", "niceness repair needs a monotone formula")
    deficiencies = sorted(is_nice(formula).deficiencies, key=lambda item: (item[0], item[1] != "negative"))
    if not deficiencies:
        return formula, (), ()

    next_id = formula.num_variables + 1
    terms = list(formula.terms)
    pairs = []
    for variable, side in deficiencies:
        z, w = next_id, next_id + 1
        next_id += 2
        if side == "negative":
            terms.append(Term((Literal(variable), Literal(z), Literal(w))))
            terms.append(Term((Literal(z, False), Literal(w, False))))
        else:
            terms.append(Term((Literal(variable, False), Literal(z, False), Literal(w, False))))
            terms.append(Term((Literal(z), Literal(w))))
        logger.debug("repaired %s side of x%d with z=%d, w=%d", side, variable, z, w)
        pairs.append((z, w))
    repaired = formula.with_terms(terms, extra_universals=2 * len(pairs))
    return repaired, tuple(pairs), tuple(deficiencies)


def pad_terms(formula: Q3DNF) -> Q3DNF:
    """Pad every short term to three slots by repeating its last literal."""
    return _pad_terms(formula)[0]


def _pad_terms(formula: Q3DNF) -> Tuple[Q3DNF, int]:
    padded = 0
    terms = []
    for term in formula.terms:
        if term.width < 3:
            literals = term.literals + (term.literals[-1],) * (3 - term.width)
            terms.append(Term(literals))
            padded += 1
        else:
            terms.append(term)
    if not padded:
        return formula, 0
    return formula.with_terms(terms), padded


def normalize_with_trace(formula: Q3DNF) -> NormalizationResult:
    """
    Run the full normalization and report what changed.

    Args:
        formula: Any formula with n >= 1 and at least one term

    Returns:
        NormalizationResult with the nice monotone width-3 formula
    """
    if formula.n < 1:
        raise PreconditionError("no-existential-variables", "normalization needs n >= 1")
    if not formula.terms:
        raise PreconditionError("no-terms", "normalization needs at least one term")

    monotone, split_variables = _monotonize(formula)
    nice, niceness_variables, repaired = _add_niceness_terms(monotone)
    padded, padded_count = _pad_terms(nice)

    if not is_monotone(padded):
        raise InvariantError("normalized formula is not monotone")
    report = is_nice(padded)
    if not report.nice:
        raise InvariantError(f"normalized formula is not nice: {list(report.deficiencies)}")
    if not padded.is_width3():
        raise InvariantError("normalized formula has short terms")
    split = polarity_split(padded)
    if split.q < 1 or split.q_prime < 1:
        raise InvariantError("normalized formula lacks a positive or a negative term")
    if padded.n != formula.n:
        raise InvariantError("normalization changed the existential block")

    trace = NormalizationTrace(split_variables, niceness_variables, repaired, padded_count)
    logger.debug(
        "normalized n=%d m=%d terms=%d -> m=%d terms=%d",
        formula.n, formula.m, len(formula.terms), padded.m, len(padded.terms),
    )
    return NormalizationResult(padded, trace)


def normalize_pipeline(formula: Q3DNF) -> Q3DNF:
    """Normalize to a nice monotone width-3 formula with the same truth value."""
    return normalize_with_trace(formula).formula
