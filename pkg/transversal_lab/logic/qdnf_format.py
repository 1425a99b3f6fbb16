"""
Reader and writer for the line-oriented `p qdnf` formula format.

    # comment
    p qdnf <n> <m> <#terms>
    t <lit> <lit> <lit>

A literal is a signed variable id; 1..n are existential, n+1..n+m universal.
"""

from typing import Iterable, List, Optional

from ..exceptions import FormulaError, ParseError
from .formula import Q3DNF, Literal, Term


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line_number)


def parse_qdnf(text: str) -> Q3DNF:
    """
    Parse a formula file.

    Args:
        text: File contents

    Returns:
        Q3DNF: The parsed formula

    Raises:
        ParseError: With the offending line number
    """
    header = None
    terms: List[Term] = []
    expected_terms = 0
    header_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]

        if kind == "p":
            if header is not None:
                raise ParseError("duplicate header", line_number)
            if len(tokens) != 5 or tokens[1] != "qdnf":
                raise ParseError("header must read 'p qdnf <n> <m> <#terms>'", line_number)
            n = _parse_int(tokens[2], line_number, "n")
            m = _parse_int(tokens[3], line_number, "m")
            expected_terms = _parse_int(tokens[4], line_number, "term count")
            if n < 0 or m < 0 or expected_terms < 0:
                raise ParseError("header values must be non-negative", line_number)
            header = (n, m)
            header_line = line_number
        elif kind == "t":
            if header is None:
                raise ParseError("term before header", line_number)
            if len(tokens) != 4:
                raise ParseError(f"a term needs exactly three literals, got {len(tokens) - 1}", line_number)
            values = [_parse_int(token, line_number, "literal") for token in tokens[1:]]
            limit = header[0] + header[1]
            for value in values:
                if value == 0 or abs(value) > limit:
                    raise ParseError(f"literal {value} outside +-1..{limit}", line_number)
            terms.append(Term(tuple(Literal.from_int(value) for value in values)))
        else:
            raise ParseError(f"unknown line type {kind!r}", line_number)

    if header is None:
        raise ParseError("missing 'p qdnf' header")
    if len(terms) != expected_terms:
        raise ParseError(f"header announces {expected_terms} terms, found {len(terms)}", header_line)
    return Q3DNF(header[0], header[1], tuple(terms))


def format_qdnf(formula: Q3DNF, comments: Optional[Iterable[str]] = None) -> str:
    """
    Serialize a formula with exactly-three-slot terms.

    Args:
        formula: The formula
        comments: Optional lines written as '#' comments before the header

    Returns:
        str: File contents ending with a newline
    """
    lines = [f"# {comment}" for comment in (comments or [])]
    lines.append(f"p qdnf {formula.n} {formula.m} {len(formula.terms)}")
    for index, term in enumerate(formula.terms):
        if term.width != 3:
            raise FormulaError(f"term {index} has {term.width} slots; pad it before writing")
        lines.append("t " + " ".join(str(value) for value in term.to_ints()))
    return "\n".join(lines) + "\n"


def read_qdnf(path: str) -> Q3DNF:
    """Read and parse a formula file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_qdnf(handle.read())


def write_qdnf(path: str, formula: Q3DNF, comments: Optional[Iterable[str]] = None) -> None:
    """Write a formula file."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_qdnf(formula, comments))
