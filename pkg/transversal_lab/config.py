"""
Scale limits and switches shared by the exhaustive oracles.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """
    Practical bounds for the brute-force oracles.

    Attributes:
        max_formula_variables: Largest n + m accepted by the formula evaluator
        max_graph_vertices: Largest vertex count accepted by MIS enumeration
        max_mis_count: Enumeration aborts once more sets than this are found
        generator_retry_cap: Random draws before the nice generator falls back to repair
        strict_canonicalize: Check the transversal precondition before canonicalizing
    """

    max_formula_variables: int = 24
    max_graph_vertices: int = 80
    max_mis_count: int = 100000
    generator_retry_cap: int = 200
    strict_canonicalize: bool = False

    def with_overrides(self, **changes) -> "Limits":
        """Return a copy with the given fields replaced; None values are ignored."""
        return replace(self, **{key: value for key, value in changes.items() if value is not None})


DEFAULT_LIMITS = Limits()
