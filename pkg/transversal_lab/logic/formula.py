"""
Data model and brute-force semantics for quantified 3-DNF formulas.

A formula is ∃x ∀y of a disjunction of terms, each term a conjunction of
literal slots. Variables 1..n form the existential block and n+1..n+m the
universal block.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..config import DEFAULT_LIMITS, Limits
from ..exceptions import FormulaError, PreconditionError, ScaleLimitError, ScopeError

logger = logging.getLogger(__name__)


class Block(Enum):
    """Quantifier block of a variable."""

    EXISTENTIAL = "existential"
    UNIVERSAL = "universal"


class Scope(Enum):
    """Declared scope of an assignment."""

    X = "x"
    Y = "y"
    FULL = "full"


class TermPolarity(Enum):
    """Polarity class of a term."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    MIXED = "mixed"


@dataclass(frozen=True, order=True)
class Literal:
    """
    A possibly negated variable.

    Attributes:
        variable: 1-based variable id
        positive: False for a negated occurrence
    """

    variable: int
    positive: bool = True

    def __post_init__(self):
        if self.variable < 1:
            raise FormulaError(f"variable ids are 1-based, got {self.variable}")

    @classmethod
    def from_int(cls, value: int) -> "Literal":
        """Build a literal from its signed-integer form (negative means negated)."""
        if value == 0:
            raise FormulaError("literal 0 is not a variable")
        return cls(abs(value), value > 0)

    def to_int(self) -> int:
        return self.variable if self.positive else -self.variable

    def negated(self) -> "Literal":
        return Literal(self.variable, not self.positive)

    def block(self, n: int) -> Block:
        """Block of this literal's variable in a formula with n existential variables."""
        return Block.EXISTENTIAL if self.variable <= n else Block.UNIVERSAL

    def is_satisfied(self, value: bool) -> bool:
        return value == self.positive

    def __str__(self):
        return str(self.to_int())


@dataclass(frozen=True)
class Term:
    """
    A conjunction of literal slots.

    Slots are an ordered multiset; a term read as a set of literals ignores
    duplicates. Formulas in normal form have exactly three slots, the
    normalization passes also produce two-slot terms.
    """

    literals: Tuple[Literal, ...]

    def __post_init__(self):
        if not 1 <= len(self.literals) <= 3:
            raise FormulaError(f"a term has one to three literal slots, got {len(self.literals)}")

    @classmethod
    def of(cls, *values: int) -> "Term":
        """Build a term from signed integers, e.g. Term.of(1, 1, -3)."""
        return cls(tuple(Literal.from_int(value) for value in values))

    @property
    def literal_set(self) -> FrozenSet[Literal]:
        return frozenset(self.literals)

    @property
    def distinct_literals(self) -> Tuple[Literal, ...]:
        """Distinct literals in first-occurrence order."""
        return tuple(dict.fromkeys(self.literals))

    @property
    def variables(self) -> FrozenSet[int]:
        return frozenset(literal.variable for literal in self.literals)

    @property
    def width(self) -> int:
        return len(self.literals)

    @property
    def polarity(self) -> TermPolarity:
        signs = {literal.positive for literal in self.literals}
        if signs == {True}:
            return TermPolarity.POSITIVE
        if signs == {False}:
            return TermPolarity.NEGATIVE
        return TermPolarity.MIXED

    def mentions(self, variable: int) -> bool:
        return variable in self.variables

    def to_ints(self) -> Tuple[int, ...]:
        return tuple(literal.to_int() for literal in self.literals)

    def __str__(self):
        return "(" + " & ".join(str(literal) for literal in self.literals) + ")"


@dataclass(frozen=True)
class Assignment:
    """
    Truth values over a contiguous range of variable ids.

    Attributes:
        first: Id of the first bound variable
        bits: Values for variables first, first+1, ...
        scope: Declared scope (x-block, y-block or both)
    """

    first: int
    bits: Tuple[bool, ...]
    scope: Scope = Scope.FULL

    @classmethod
    def for_x(cls, bits: Sequence[bool]) -> "Assignment":
        return cls(1, tuple(bool(bit) for bit in bits), Scope.X)

    @classmethod
    def for_y(cls, n: int, bits: Sequence[bool]) -> "Assignment":
        return cls(n + 1, tuple(bool(bit) for bit in bits), Scope.Y)

    @classmethod
    def full(cls, bits: Sequence[bool]) -> "Assignment":
        return cls(1, tuple(bool(bit) for bit in bits), Scope.FULL)

    @classmethod
    def from_bits(cls, text: str, first: int = 1, scope: Scope = Scope.X) -> "Assignment":
        """Parse a bit string such as '10' (leftmost character is the first variable)."""
        if any(char not in "01" for char in text):
            raise FormulaError(f"not a bit string: {text!r}")
        return cls(first, tuple(char == "1" for char in text), scope)

    @property
    def variables(self) -> range:
        return range(self.first, self.first + len(self.bits))

    def binds(self, variable: int) -> bool:
        return self.first <= variable < self.first + len(self.bits)

    def value(self, variable: int) -> bool:
        if not self.binds(variable):
            raise ScopeError(f"variable {variable} is not bound by {self.scope.value}-assignment {self.to_bits()}")
        return self.bits[variable - self.first]

    def __getitem__(self, variable: int) -> bool:
        return self.value(variable)

    def to_bits(self) -> str:
        return "".join("1" if bit else "0" for bit in self.bits)

    def to_dict(self) -> Dict[int, bool]:
        return {variable: self.bits[variable - self.first] for variable in self.variables}

    def __str__(self):
        return self.to_bits()


@dataclass(frozen=True)
class Q3DNF:
    """
    An ∃x ∀y quantified DNF formula.

    Attributes:
        n: Number of existential variables (ids 1..n)
        m: Number of universal variables (ids n+1..n+m)
        terms: The disjuncts
    """

    n: int
    m: int
    terms: Tuple[Term, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise FormulaError(f"block sizes must be non-negative, got n={self.n}, m={self.m}")
        object.__setattr__(self, "terms", tuple(self.terms))
        for index, term in enumerate(self.terms):
            for literal in term.literals:
                if literal.variable > self.n + self.m:
                    raise FormulaError(
                        f"term {index} uses variable {literal.variable} outside 1..{self.n + self.m}"
                    )

    @classmethod
    def of(cls, n: int, m: int, terms: Iterable[Sequence[int]]) -> "Q3DNF":
        """Build a formula from signed-integer term tuples."""
        return cls(n, m, tuple(Term.of(*values) for values in terms))

    @property
    def num_variables(self) -> int:
        return self.n + self.m

    @property
    def existential_ids(self) -> range:
        return range(1, self.n + 1)

    @property
    def universal_ids(self) -> range:
        return range(self.n + 1, self.n + self.m + 1)

    def block_of(self, variable: int) -> Block:
        if not 1 <= variable <= self.num_variables:
            raise FormulaError(f"variable {variable} outside 1..{self.num_variables}")
        return Block.EXISTENTIAL if variable <= self.n else Block.UNIVERSAL

    def with_terms(self, terms: Iterable[Term], extra_universals: int = 0) -> "Q3DNF":
        """Return a copy with new terms and the universal block grown by extra_universals."""
        return Q3DNF(self.n, self.m + extra_universals, tuple(terms))

    def is_width3(self) -> bool:
        return all(term.width == 3 for term in self.terms)

    def __str__(self):
        body = " | ".join(str(term) for term in self.terms) or "false"
        return f"E x1..x{self.n} A y1..y{self.m}: {body}"


@dataclass(frozen=True)
class PolaritySplit:
    """Term indices partitioned by polarity."""

    positive: Tuple[int, ...]
    negative: Tuple[int, ...]
    mixed: Tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.positive)

    @property
    def q_prime(self) -> int:
        return len(self.negative)


@dataclass(frozen=True)
class NicenessReport:
    """Outcome of the niceness check; deficiencies are (variable, missing-side) pairs."""

    nice: bool
    deficiencies: Tuple[Tuple[int, str], ...] = ()


@dataclass(frozen=True)
class UniversalCheck:
    """Whether the matrix holds for every y under a fixed x."""

    holds: bool
    counterexample: Optional[Assignment] = None


@dataclass(frozen=True)
class Evaluation:
    """Truth value of a formula and its least witness."""

    holds: bool
    witness: Optional[Assignment] = None

    def to_dict(self) -> Dict:
        return {
            'holds': self.holds,
            'witness': self.witness.to_bits() if self.witness is not None else None,
        }


def evaluate_term(term: Term, assignment: Assignment) -> bool:
    """
    Evaluate a term.

    Args:
        term: The term
        assignment: Must bind every variable of the term

    Returns:
        bool: True iff all literal slots are satisfied
    """
    for variable in term.variables:
        if not assignment.binds(variable):
            raise ScopeError(f"term {term} needs variable {variable}, unbound in {assignment.scope.value}-assignment")
    return all(literal.is_satisfied(assignment.value(literal.variable)) for literal in term.literals)


def evaluate_matrix(formula: Q3DNF, assignment: Assignment) -> bool:
    """True iff at least one term of the formula is satisfied by the full assignment."""
    for variable in range(1, formula.num_variables + 1):
        if not assignment.binds(variable):
            raise ScopeError(f"variable {variable} is unbound; the matrix needs all {formula.num_variables}")
    return any(evaluate_term(term, assignment) for term in formula.terms)


def _check_scale(formula: Q3DNF, limits: Limits) -> None:
    if formula.num_variables > limits.max_formula_variables:
        raise ScaleLimitError("formula variable count", formula.num_variables, limits.max_formula_variables)


def _boolean_vectors(width: int) -> Iterator[Tuple[bool, ...]]:
    """All boolean vectors in lexicographic order, first position most significant, False < True."""
    return itertools.product((False, True), repeat=width)


def _cofactor_terms(formula: Q3DNF, x: Assignment) -> List[FrozenSet[Literal]]:
    """Terms restricted to y under x: falsified terms dropped, x-literals removed."""
    restricted = []
    for term in formula.terms:
        remaining = set()
        falsified = False
        for literal in term.literal_set:
            if literal.variable <= formula.n:
                if not literal.is_satisfied(x.value(literal.variable)):
                    falsified = True
                    break
            else:
                remaining.add(literal)
        if not falsified:
            restricted.append(frozenset(remaining))
    return restricted


def _least_falsifier(terms: List[FrozenSet[Literal]], variables: Sequence[int]) -> Optional[Tuple[bool, ...]]:
    """
    Lexicographically least assignment to variables falsifying every term, or None.

    Splits on variables in order (False branch first); a branch holding an
    emptied term is true everywhere and is skipped, a branch with no terms
    left is falsified by its all-False completion.
    """
    if any(not term for term in terms):
        return None
    if not terms:
        return (False,) * len(variables)
    variable, rest = variables[0], variables[1:]
    for value in (False, True):
        cofactor = []
        for term in terms:
            if Literal(variable, not value) in term:
                continue
            cofactor.append(term - {Literal(variable, value)})
        tail = _least_falsifier(cofactor, rest)
        if tail is not None:
            return (value,) + tail
    return None


def forall_holds(formula: Q3DNF, x: Assignment, exhaustive: bool = False) -> UniversalCheck:
    """
    Decide whether the matrix is true for every y under the given x.

    Args:
        formula: The formula
        x: Assignment binding the existential block
        exhaustive: Loop over all 2^m y-vectors instead of splitting on cofactors

    Returns:
        UniversalCheck with the lexicographically least falsifying y when not holding
    """
    for variable in formula.existential_ids:
        if not x.binds(variable):
            raise ScopeError(f"x-assignment does not bind variable {variable}")
    if exhaustive:
        for y_bits in _boolean_vectors(formula.m):
            y = Assignment.for_y(formula.n, y_bits)
            full = Assignment.full(tuple(x.value(v) for v in formula.existential_ids) + y.bits)
            if not evaluate_matrix(formula, full):
                return UniversalCheck(False, y)
        return UniversalCheck(True)

    falsifier = _least_falsifier(_cofactor_terms(formula, x), list(formula.universal_ids))
    if falsifier is None:
        return UniversalCheck(True)
    return UniversalCheck(False, Assignment.for_y(formula.n, falsifier))


def evaluate_q3dnf(formula: Q3DNF, limits: Limits = DEFAULT_LIMITS, exhaustive: bool = False) -> Evaluation:
    """
    Decide ∃x ∀y of the matrix by exhaustive search over x.

    The x-vectors are tried in lexicographic order (variable 1 most
    significant, False before True), so the witness is the least one.
    The practical bound is limits.max_formula_variables on n + m.

    Args:
        formula: The formula
        limits: Scale limits
        exhaustive: Use the plain 2^(n+m) loop for the universal check

    Returns:
        Evaluation with the least witness when the formula holds
    """
    _check_scale(formula, limits)
    for x_bits in _boolean_vectors(formula.n):
        x = Assignment.for_x(x_bits)
        if forall_holds(formula, x, exhaustive=exhaustive).holds:
            logger.debug("formula holds with witness x=%s", x.to_bits())
            return Evaluation(True, x)
    return Evaluation(False)


def polarity_split(formula: Q3DNF) -> PolaritySplit:
    """Partition term indices into positive, negative and mixed."""
    buckets: Dict[TermPolarity, List[int]] = {polarity: [] for polarity in TermPolarity}
    for index, term in enumerate(formula.terms):
        buckets[term.polarity].append(index)
    return PolaritySplit(
        tuple(buckets[TermPolarity.POSITIVE]),
        tuple(buckets[TermPolarity.NEGATIVE]),
        tuple(buckets[TermPolarity.MIXED]),
    )


def is_monotone(formula: Q3DNF) -> bool:
    return not polarity_split(formula).mixed


def is_nice(formula: Q3DNF) -> NicenessReport:
    """
    Check that every existential variable is avoided by some positive and some negative term.

    Args:
        formula: A monotone formula

    Returns:
        NicenessReport listing (variable, "positive"|"negative") for each missing side
    """
    split = polarity_split(formula)
    if split.mixed:
        raise PreconditionError("non-monotone", f"mixed terms at indices {list(split.mixed)}")
    deficiencies = []
    for variable in formula.existential_ids:
        for side, indices in (("positive", split.positive), ("negative", split.negative)):
            if not any(not formula.terms[index].mentions(variable) for index in indices):
                deficiencies.append((variable, side))
    return NicenessReport(not deficiencies, tuple(deficiencies))
