"""
Construction of the bipartite gadget graph from a nice monotone formula.

Vertex labels are bit-exact and carry the role of every vertex:

    x<i> xb<i> a<i> b<i> ab<i> bb<i>   variable gadget of x_i
    y<j> yb<j>                          universal variable y_j
    t<l> r<l> s<l>                      l-th positive term
    tn<l> rn<l> sn<l>                   l-th negative term
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..exceptions import NotNiceError, PreconditionError
from ..graph.labeled_graph import LabeledBipartiteGraph, Side, Vertex, VertexSet
from ..logic.formula import Q3DNF, is_monotone, is_nice, polarity_split

logger = logging.getLogger(__name__)

LABEL_PREFIX = {
    "x": "x", "xbar": "xb", "a": "a", "b": "b", "abar": "ab", "bbar": "bb",
    "y": "y", "ybar": "yb",
    "t": "t", "r": "r", "s": "s",
    "tprime": "tn", "rprime": "rn", "sprime": "sn",
}
KIND_OF_PREFIX = {prefix: kind for kind, prefix in LABEL_PREFIX.items()}
P_KINDS = frozenset({"a", "b", "x", "y", "t", "r", "sprime"})
HUB_KINDS = frozenset({"a", "b", "abar", "bbar", "r", "s", "rprime", "sprime"})

_LABEL = re.compile(r"^(xb|x|ab|a|bb|b|yb|y|tn|t|rn|r|sn|s)([1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class Role:
    """
    What a vertex stands for.

    Attributes:
        kind: One of the LABEL_PREFIX keys
        index: 1-based variable or term index within its family
    """

    kind: str
    index: int

    @property
    def label(self) -> str:
        return f"{LABEL_PREFIX[self.kind]}{self.index}"

    @property
    def side(self) -> Side:
        return Side.P if self.kind in P_KINDS else Side.N

    @property
    def is_hub(self) -> bool:
        return self.kind in HUB_KINDS

    @classmethod
    def from_label(cls, label: str) -> "Role":
        match = _LABEL.match(label)
        if not match:
            raise PreconditionError("unknown-role-label", label)
        return cls(KIND_OF_PREFIX[match.group(1)], int(match.group(2)))


def role_group(label: str) -> str:
    """DOT group of a vertex: its role prefix."""
    return label.rstrip("0123456789")


@dataclass(frozen=True)
class ReductionOutput:
    """
    The constructed graph with its budget and role map.

    Attributes:
        graph: The bipartite graph with sides P and N
        k: Budget 2n + q + q'
        roles: Vertex id -> role
        n: Number of existential variables
        m: Number of universal variables
        q: Number of positive terms
        q_prime: Number of negative terms
        formula: The source formula, when built from one
    """

    graph: LabeledBipartiteGraph
    k: int
    roles: Dict[int, Role]
    n: int
    m: int
    q: int
    q_prime: int
    formula: Optional[Q3DNF] = None
    _ids: Dict[Role, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self._ids:
            object.__setattr__(self, "_ids", {role: vertex_id for vertex_id, role in self.roles.items()})

    @classmethod
    def from_graph(cls, graph: LabeledBipartiteGraph, k: Optional[int] = None) -> "ReductionOutput":
        """
        Recover the role map of a graph written by `reduce`.

        Args:
            graph: Graph whose labels follow the role naming
            k: The budget sidecar, checked against the role counts when given

        Returns:
            ReductionOutput without a source formula
        """
        roles = {vertex_id: Role.from_label(graph.label(vertex_id)) for vertex_id in graph.vertex_ids}
        counts: Dict[str, Set[int]] = {kind: set() for kind in LABEL_PREFIX}
        for vertex_id, role in roles.items():
            if graph.side(vertex_id) is not role.side:
                raise PreconditionError("side-mismatch", f"{role.label} must be on side {role.side.value}")
            counts[role.kind].add(role.index)

        families = (("x", "xbar", "a", "b", "abar", "bbar"), ("y", "ybar"), ("t", "r", "s"), ("tprime", "rprime", "sprime"))
        sizes = []
        for family in families:
            size = len(counts[family[0]])
            for kind in family:
                if counts[kind] != set(range(1, size + 1)):
                    raise PreconditionError("incomplete-gadget", f"{kind} indices {sorted(counts[kind])}")
            sizes.append(size)
        n, m, q, q_prime = sizes
        budget_value = 2 * n + q + q_prime
        if k is not None and k != budget_value:
            raise PreconditionError("budget-mismatch", f"file says k={k}, roles give {budget_value}")
        return cls(graph, budget_value, roles, n, m, q, q_prime)

    def vertex(self, kind: str, index: int) -> int:
        """Id of the vertex with the given role."""
        role = Role(kind, index)
        if role not in self._ids:
            raise PreconditionError("unknown-role", role.label)
        return self._ids[role]

    def vertices_of(self, kind: str) -> List[int]:
        """Ids of every vertex of one kind, by index."""
        return [self._ids[role] for role in sorted(self._ids) if role.kind == kind]

    def role(self, vertex_id: int) -> Role:
        return self.roles[vertex_id]

    def hubs(self) -> VertexSet:
        return VertexSet.of(vertex_id for vertex_id, role in self.roles.items() if role.is_hub)

    def labels(self, vertex_set: Iterable[int]) -> List[str]:
        return [self.roles[vertex_id].label for vertex_id in sorted(vertex_set)]

    def to_dict(self) -> Dict:
        return {
            'vertices': self.graph.num_vertices,
            'edges': self.graph.num_edges,
            'k': self.k,
            'n': self.n,
            'm': self.m,
            'q': self.q,
            'q_prime': self.q_prime,
        }


def _check_reducible(formula: Q3DNF) -> None:
    if not is_monotone(formula):
        raise PreconditionError("non-monotone", "the reduction needs a monotone formula")
    if not formula.is_width3():
        raise PreconditionError("not-width-3", "every term needs three literal slots")
    if formula.n < 1:
        raise PreconditionError("no-existential-variables", "the reduction needs n >= 1")
    report = is_nice(formula)
    if not report.nice:
        raise NotNiceError(list(report.deficiencies))
    split = polarity_split(formula)
    if split.q < 1:
        raise PreconditionError("no-positive-term")
    if split.q_prime < 1:
        raise PreconditionError("no-negative-term")


def budget(formula: Q3DNF) -> int:
    """The transversal budget k = 2n + q + q'."""
    split = polarity_split(formula)
    if split.mixed:
        raise PreconditionError("non-monotone", "the budget counts positive and negative terms")
    return 2 * formula.n + split.q + split.q_prime


def build_graph(formula: Q3DNF) -> ReductionOutput:
    """
    Build the gadget graph of a nice monotone width-3 formula.

    Args:
        formula: Nice monotone formula with n >= 1, q >= 1, q' >= 1

    Returns:
        ReductionOutput with 6n + 2m + 3q + 3q' vertices and k = 2n + q + q'
    """
    _check_reducible(formula)
    split = polarity_split(formula)
    n, m = formula.n, formula.m

    roles: List[Role] = []
    for i in range(1, n + 1):
        roles.extend(Role(kind, i) for kind in ("a", "b", "x", "abar", "bbar", "xbar"))
    for j in range(1, m + 1):
        roles.extend((Role("y", j), Role("ybar", j)))
    for index in range(1, split.q + 1):
        roles.extend(Role(kind, index) for kind in ("t", "r", "s"))
    for index in range(1, split.q_prime + 1):
        roles.extend(Role(kind, index) for kind in ("tprime", "rprime", "sprime"))
    ids = {role: vertex_id for vertex_id, role in enumerate(roles)}

    def vid(kind: str, index: int) -> int:
        return ids[Role(kind, index)]

    def literal_vertex(variable: int, positive: bool) -> int:
        if variable <= n:
            return vid("x" if positive else "xbar", variable)
        return vid("y" if positive else "ybar", variable - n)

    p_side = {vertex_id for role, vertex_id in ids.items() if role.side is Side.P}
    n_side = set(ids.values()) - p_side
    edges: Set[FrozenSet[int]] = set()

    def link(u: int, targets: Iterable[int]) -> None:
        for v in targets:
            edges.add(frozenset((u, v)))

    for i in range(1, n + 1):
        link(vid("x", i), [vid("xbar", i)])
        link(vid("a", i), n_side - {vid("xbar", i), vid("bbar", i)})
        link(vid("b", i), n_side - {vid("abar", i), vid("bbar", i)})
        link(vid("abar", i), p_side - {vid("x", i), vid("b", i)})
        link(vid("bbar", i), p_side - {vid("a", i), vid("b", i)})
    for j in range(1, m + 1):
        link(vid("y", j), [vid("ybar", j)])
    for index, term_index in enumerate(split.positive, start=1):
        term = formula.terms[term_index]
        link(vid("t", index), [literal_vertex(literal.variable, False) for literal in term.literal_set])
        link(vid("r", index), n_side - {vid("s", index)})
        link(vid("s", index), p_side - {vid("t", index), vid("r", index)})
    for index, term_index in enumerate(split.negative, start=1):
        term = formula.terms[term_index]
        link(vid("tprime", index), [literal_vertex(literal.variable, True) for literal in term.literal_set])
        link(vid("rprime", index), p_side - {vid("sprime", index)})
        link(vid("sprime", index), n_side - {vid("tprime", index), vid("rprime", index)})

    vertices = [Vertex(vertex_id, role.label, role.side) for role, vertex_id in ids.items()]
    graph = LabeledBipartiteGraph(vertices, [tuple(sorted(edge)) for edge in edges])
    k = 2 * n + split.q + split.q_prime
    logger.debug("built gadget graph: %d vertices, %d edges, k=%d", graph.num_vertices, graph.num_edges, k)
    return ReductionOutput(
        graph,
        k,
        {vertex_id: role for role, vertex_id in ids.items()},
        n,
        m,
        split.q,
        split.q_prime,
        formula,
    )
