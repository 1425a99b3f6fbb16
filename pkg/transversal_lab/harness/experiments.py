"""
End-to-end experiments tying the formula oracle, the reduction and the
transversal solver together, and the named acceptance suites built on them.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import ScaleLimitError, UnclassifiedMISError
from ..graph.hitting_set import brute_force_min_transversal, min_transversal
from ..graph.independent_sets import (
    enumerate_mis,
    enumerate_mis_containing,
    is_maximal_independent,
    is_transversal,
    maximal_cliques,
)
from ..graph.labeled_graph import LabeledBipartiteGraph, VertexSet, complement
from ..logic.formula import Q3DNF, evaluate_q3dnf, forall_holds
from ..logic.normalize import NormalizationTrace, normalize_with_trace
from ..reduction.gadgets import ReductionOutput, build_graph
from ..reduction.proof import (
    assignment_from_transversal,
    canonicalize,
    disjoint_witness_family,
    is_canonical,
    transversal_from_assignment,
)
from ..reduction.taxonomy import MisType, Taxonomy
from .generators import gen_graph, gen_nice_monotone, gen_q3dnf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundTripReport:
    """
    Outcome of normalize -> evaluate -> reduce -> solve on one formula.

    Attributes:
        normalized: The nice monotone width-3 formula that was reduced
        trace: What normalization changed
        input_holds: Truth value of the formula before normalization
        holds: Truth value of the normalized formula
        witness: Least witness of the normalized formula, as bits
        reduction: The gadget graph and budget
        mis_count: Number of maximal independent sets of the graph
        min_transversal_size: Optimum size, None when it exceeds k
        consistent: holds iff a transversal of size at most k exists
        exact_when_true: The optimum is exactly k whenever the formula holds
        forward_ok: The witness's transversal has size k and is a transversal
        lower_bound_ok: The k witness sets are disjoint maximal independent sets
        canonical_ok: The canonicalized optimum is a canonical transversal
        extracted_ok: The assignment read off the canonical transversal is a witness
    """

    normalized: Q3DNF
    trace: NormalizationTrace
    input_holds: bool
    holds: bool
    witness: Optional[str]
    reduction: ReductionOutput
    mis_count: int
    min_transversal_size: Optional[int]
    consistent: bool
    exact_when_true: bool
    forward_ok: Optional[bool] = None
    lower_bound_ok: bool = True
    canonical_ok: Optional[bool] = None
    extracted_ok: Optional[bool] = None

    @property
    def k(self) -> int:
        return self.reduction.k

    @property
    def truth_preserved(self) -> bool:
        return self.input_holds == self.holds

    @property
    def ok(self) -> bool:
        checks = (self.forward_ok, self.canonical_ok, self.extracted_ok)
        return (
            self.truth_preserved
            and self.consistent
            and self.exact_when_true
            and self.lower_bound_ok
            and all(check is not False for check in checks)
        )

    def to_dict(self) -> Dict:
        return {
            'n': self.normalized.n,
            'm': self.normalized.m,
            'terms': len(self.normalized.terms),
            'input_holds': self.input_holds,
            'holds': self.holds,
            'witness': self.witness,
            'vertices': self.reduction.graph.num_vertices,
            'k': self.k,
            'mis_count': self.mis_count,
            'min_transversal_size': self.min_transversal_size if self.min_transversal_size is not None else f">{self.k}",
            'consistent': self.consistent,
            'exact_when_true': self.exact_when_true,
            'truth_preserved': self.truth_preserved,
            'forward_ok': self.forward_ok,
            'lower_bound_ok': self.lower_bound_ok,
            'canonical_ok': self.canonical_ok,
            'extracted_ok': self.extracted_ok,
        }


def lower_bound_holds(red: ReductionOutput) -> bool:
    """The disjoint witness family has k pairwise disjoint maximal independent sets."""
    family = disjoint_witness_family(red)
    if len(family) != red.k:
        return False
    seen = set()
    for members in family:
        if not members.isdisjoint(seen) or not is_maximal_independent(red.graph, members):
            return False
        seen.update(members.members)
    return True


def round_trip(formula: Q3DNF, limits: Limits = DEFAULT_LIMITS) -> RoundTripReport:
    """
    Check the reduction on one formula.

    The formula is always normalized first. The graph's minimum transversal
    is searched with limit k, and the proof maps are exercised on the
    result: the witness's transversal, the disjoint lower-bound family,
    canonicalization of the optimum and the assignment it encodes.

    Args:
        formula: Any formula with n >= 1 and at least one term
        limits: Scale limits

    Returns:
        RoundTripReport

    Raises:
        ScaleLimitError: When the formula or its graph is beyond the limits
    """
    input_holds = evaluate_q3dnf(formula, limits).holds
    normalization = normalize_with_trace(formula)
    normalized = normalization.formula
    evaluation = evaluate_q3dnf(normalized, limits)
    red = build_graph(normalized)
    graph = red.graph

    mis_count = len(enumerate_mis(graph, limits))
    search = min_transversal(graph, limit=red.k, limits=limits)
    consistent = evaluation.holds == search.found
    exact = not evaluation.holds or search.size == red.k

    forward_ok = None
    if evaluation.holds and evaluation.witness is not None:
        forward = transversal_from_assignment(red, evaluation.witness)
        forward_ok = len(forward) == red.k and is_transversal(graph, forward, limits).ok

    canonical_ok = extracted_ok = None
    if search.found and search.vertex_set is not None:
        canonical = canonicalize(red, search.vertex_set, limits)
        canonical_ok = is_canonical(red, canonical) and is_transversal(graph, canonical, limits).ok
        if canonical_ok:
            extracted = assignment_from_transversal(red, canonical)
            extracted_ok = forall_holds(normalized, extracted).holds

    report = RoundTripReport(
        normalized=normalized,
        trace=normalization.trace,
        input_holds=input_holds,
        holds=evaluation.holds,
        witness=evaluation.witness.to_bits() if evaluation.witness is not None else None,
        reduction=red,
        mis_count=mis_count,
        min_transversal_size=search.size if search.found else None,
        consistent=consistent,
        exact_when_true=exact,
        forward_ok=forward_ok,
        lower_bound_ok=lower_bound_holds(red),
        canonical_ok=canonical_ok,
        extracted_ok=extracted_ok,
    )
    if not report.ok:
        logger.warning("round trip failed: %s", report.to_dict())
    return report


@dataclass(frozen=True)
class AuditReport:
    """
    Classification of the maximal independent sets of one gadget graph.

    Attributes:
        scope: "full" when every set was enumerated, "nonregular" when only hub-containing sets were
        mis_count: Number of sets classified
        per_type_counts: Sets per class
        unclassified: Label lists of sets that matched no class
        multiplicity_failures: Classes whose count differs from the expected one
        defining_sets_ok: Every defining set of a non-regular class is maximal independent
    """

    scope: str
    mis_count: int
    per_type_counts: Dict[MisType, int]
    unclassified: Tuple[Tuple[str, ...], ...] = ()
    multiplicity_failures: Tuple[str, ...] = ()
    defining_sets_ok: bool = True

    @property
    def ok(self) -> bool:
        return not self.unclassified and not self.multiplicity_failures and self.defining_sets_ok

    def to_dict(self) -> Dict:
        return {
            'scope': self.scope,
            'mis_count': self.mis_count,
            'per_type_counts': {int(mis_type): self.per_type_counts.get(mis_type, 0) for mis_type in MisType},
            'unclassified': len(self.unclassified),
            'unclassified_sets': ["{" + ",".join(labels) + "}" for labels in self.unclassified],
            'multiplicity_failures': list(self.multiplicity_failures),
            'defining_sets_ok': self.defining_sets_ok,
        }


def expected_multiplicities(red: ReductionOutput) -> Dict[MisType, int]:
    """Exact counts of the finite classes: P and N, four sets per variable, one gadget set per term."""
    return {
        MisType.SIDE: 2,
        MisType.VARIABLE_GADGET: 4 * red.n,
        MisType.POSITIVE_TERM_GADGET: red.q,
        MisType.NEGATIVE_TERM_GADGET: red.q_prime,
    }


def _nonregular_sets(red: ReductionOutput, limits: Limits) -> List[VertexSet]:
    relaxed = limits.with_overrides(max_graph_vertices=max(limits.max_graph_vertices, red.graph.num_vertices))
    found = set()
    for hub in red.hubs():
        found.update(enumerate_mis_containing(red.graph, hub, relaxed))
    return sorted(found)


def classification_audit(red: ReductionOutput, limits: Limits = DEFAULT_LIMITS) -> AuditReport:
    """
    Classify every maximal independent set of a gadget graph.

    Graphs within the enumeration limits are enumerated in full. Larger ones
    fall back to the sets containing some hub vertex, which are exactly the
    non-regular ones.

    Args:
        red: Reduction output
        limits: Scale limits

    Returns:
        AuditReport
    """
    try:
        sets = enumerate_mis(red.graph, limits)
        scope = "full"
    except ScaleLimitError as error:
        logger.info("full enumeration out of reach (%s); auditing non-regular sets only", error)
        sets = _nonregular_sets(red, limits)
        scope = "nonregular"

    taxonomy = Taxonomy(red)
    counts: Counter = Counter()
    unclassified = []
    for members in sets:
        try:
            counts[taxonomy.classify(members, check=False).mis_type] += 1
        except UnclassifiedMISError as error:
            unclassified.append(tuple(error.members))

    failures = [
        f"type {int(mis_type)}: expected {expected}, found {counts.get(mis_type, 0)}"
        for mis_type, expected in expected_multiplicities(red).items()
        if counts.get(mis_type, 0) != expected
    ]
    defining_ok = all(is_maximal_independent(red.graph, members) for _, members in taxonomy.defining_sets())
    report = AuditReport(scope, len(sets), dict(counts), tuple(unclassified), tuple(failures), defining_ok)
    logger.debug("audit (%s): %d sets, %s", scope, len(sets), report.to_dict()['per_type_counts'])
    return report


@dataclass(frozen=True)
class CrossCheckReport:
    """
    Agreement of the graph oracles on one graph.

    Attributes:
        transversal_agree: Both transversal checks agree with plain intersection on every candidate set
        cliques_agree: MIS enumeration equals the maximal cliques of the complement
        vertices: Vertex count of the graph
        optimum_certified: The branch-and-bound optimum equals exhaustive subset search
    """

    vertices: int
    transversal_agree: bool
    cliques_agree: bool
    optimum_certified: bool

    @property
    def ok(self) -> bool:
        return self.transversal_agree and self.cliques_agree and self.optimum_certified

    def to_dict(self) -> Dict:
        return {
            'vertices': self.vertices,
            'transversal_agree': self.transversal_agree,
            'cliques_agree': self.cliques_agree,
            'optimum_certified': self.optimum_certified,
        }


def cross_check(graph: LabeledBipartiteGraph, limits: Limits = DEFAULT_LIMITS) -> CrossCheckReport:
    """Run the three oracle cross-checks on one small graph."""
    sets = enumerate_mis(graph, limits)
    cliques_agree = sets == maximal_cliques(complement(graph), limits)

    search = min_transversal(graph, limits=limits)
    certified = brute_force_min_transversal(graph, limits)
    optimum_certified = search.found == certified.found and search.size == certified.size

    candidates = [VertexSet(), VertexSet.of(graph.vertex_ids)]
    if search.vertex_set is not None:
        candidates.append(search.vertex_set)
        candidates.extend(VertexSet.of(search.vertex_set.members - {vertex_id}) for vertex_id in search.vertex_set)
    transversal_agree = True
    for candidate in candidates:
        expected = all(not members.isdisjoint(candidate.members) for members in sets)
        direct = is_transversal(graph, candidate, limits, method="direct")
        enumerated = is_transversal(graph, candidate, limits, method="enumerate")
        if direct.ok != expected or enumerated.ok != expected or direct.counterexample != enumerated.counterexample:
            transversal_agree = False
    return CrossCheckReport(graph.num_vertices, transversal_agree, cliques_agree, optimum_certified)


Instance = Union[Q3DNF, LabeledBipartiteGraph]


@dataclass(frozen=True)
class Suite:
    """A named acceptance suite: an instance source and the kind of check it gets."""

    name: str
    description: str
    kind: str
    instances: Callable[[Limits], Iterator[Tuple[str, Instance]]]


def _nice_instances(limits: Limits) -> Iterator[Tuple[str, Instance]]:
    for seed in range(200):
        yield f"nice(2,1,2,2) seed={seed}", gen_nice_monotone(2, 1, 2, 2, seed, limits)
    for seed in range(100):
        yield f"nice(3,2,3,3) seed={seed}", gen_nice_monotone(3, 2, 3, 3, seed, limits)


def _pipeline_instances(limits: Limits) -> Iterator[Tuple[str, Instance]]:
    for seed in range(200):
        yield f"plain(3,3,4) seed={seed}", gen_q3dnf(3, 3, 4, seed)


_EDGE_PROBABILITIES = (0.2, 0.35, 0.5, 0.65)


def _graph_instances(limits: Limits) -> Iterator[Tuple[str, Instance]]:
    for seed in range(100):
        vertices = seed % 12 + 1
        probability = _EDGE_PROBABILITIES[seed % len(_EDGE_PROBABILITIES)]
        yield f"gnp({vertices},{probability}) seed={seed}", gen_graph(vertices, probability, seed)


SUITES: Dict[str, Suite] = {
    "A1": Suite("A1", "round trip on random nice monotone formulas", "formula", _nice_instances),
    "A2": Suite("A2", "round trip on random formulas through the full pipeline", "formula", _pipeline_instances),
    "A7": Suite("A7", "graph oracle cross-checks on random graphs", "graph", _graph_instances),
}


@dataclass
class SuiteSummary:
    """Aggregate over a suite run."""

    name: str
    instances: int = 0
    consistent: int = 0
    true_count: int = 0
    false_count: int = 0
    overflow: int = 0
    audit_scopes: Counter = field(default_factory=Counter)
    per_type_totals: Counter = field(default_factory=Counter)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.instances > 0 and not self.failures and self.overflow == 0

    def to_dict(self) -> Dict:
        return {
            'suite': self.name,
            'instances': self.instances,
            'consistent': self.consistent,
            'true': self.true_count,
            'false': self.false_count,
            'overflow': self.overflow,
            'audit_scopes': dict(sorted(self.audit_scopes.items())),
            'per_type_totals': {int(mis_type): self.per_type_totals.get(mis_type, 0) for mis_type in MisType},
            'failures': len(self.failures),
            'ok': self.ok,
        }


def _run_formula(summary: SuiteSummary, name: str, formula: Q3DNF, limits: Limits) -> Dict:
    report = round_trip(formula, limits)
    audit = classification_audit(report.reduction, limits)
    if report.holds:
        summary.true_count += 1
    else:
        summary.false_count += 1
    if report.consistent:
        summary.consistent += 1
    summary.audit_scopes[audit.scope] += 1
    summary.per_type_totals.update(audit.per_type_counts)
    if not report.ok or not audit.ok:
        summary.failures.append(name)
    return {**report.to_dict(), 'audit_ok': audit.ok}


def _run_graph(summary: SuiteSummary, name: str, graph: LabeledBipartiteGraph, limits: Limits) -> Dict:
    report = cross_check(graph, limits)
    if report.ok:
        summary.consistent += 1
    else:
        summary.failures.append(name)
    return report.to_dict()


def run_suite(
    name: str, count: Optional[int] = None, limits: Limits = DEFAULT_LIMITS
) -> Tuple[SuiteSummary, List[Dict]]:
    """
    Run a named acceptance suite.

    Instances beyond the scale limits are counted as overflow and listed in
    the per-instance blocks; they never count as passed.

    Args:
        name: Key of SUITES
        count: Run only the first count instances
        limits: Scale limits

    Returns:
        Tuple of (summary, per-instance field mappings)
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    summary = SuiteSummary(name)
    blocks = []
    for instance_name, instance in itertools.islice(suite.instances(limits), count):
        summary.instances += 1
        try:
            if suite.kind == "formula":
                fields = _run_formula(summary, instance_name, instance, limits)
            else:
                fields = _run_graph(summary, instance_name, instance, limits)
        except ScaleLimitError as error:
            summary.overflow += 1
            fields = {'overflow': str(error)}
        blocks.append({'instance': instance_name, **fields})
        logger.info("%s %s: %s", name, instance_name, "overflow" if 'overflow' in fields else "done")
    return summary, blocks
