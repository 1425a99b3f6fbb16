"""
Main entry point for the Transversal Lab command suite.
"""

import argparse
import logging
import sys
from typing import List, Optional

from transversal_lab.config import DEFAULT_LIMITS, Limits
from transversal_lab.exceptions import (
    GeneratorInfeasibleError,
    InvariantError,
    LabError,
    ParseError,
    PreconditionError,
    ScaleLimitError,
)
from transversal_lab.graph.graph_format import read_graph, format_graph, to_dot
from transversal_lab.graph.hitting_set import INFEASIBLE, min_transversal
from transversal_lab.graph.independent_sets import enumerate_mis, is_transversal
from transversal_lab.graph.labeled_graph import LabeledBipartiteGraph, VertexSet
from transversal_lab.harness.experiments import SUITES, classification_audit, round_trip, run_suite
from transversal_lab.harness.generators import gen_nice_monotone, gen_q3dnf
from transversal_lab.harness.report import render_report
from transversal_lab.logic.formula import evaluate_q3dnf
from transversal_lab.logic.normalize import normalize_with_trace
from transversal_lab.logic.qdnf_format import format_qdnf, read_qdnf
from transversal_lab.reduction.gadgets import ReductionOutput, build_graph, role_group

logger = logging.getLogger("transversal_lab")

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_SCALE = 4
EXIT_INVARIANT = 5


def _emit(text: str, path: Optional[str] = None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _parse_set(graph: LabeledBipartiteGraph, text: str) -> VertexSet:
    """Comma-separated labels or ids; a token naming a label wins over an id."""
    members = []
    for token in (part.strip() for part in text.split(",")):
        if not token:
            continue
        if graph.has_label(token):
            members.append(graph.id_of(token))
            continue
        try:
            vertex_id = int(token)
        except ValueError:
            raise PreconditionError("unknown-vertex", token)
        if not graph.has_vertex(vertex_id):
            raise PreconditionError("unknown-vertex", token)
        members.append(vertex_id)
    return VertexSet.of(members)


def cmd_eval(args: argparse.Namespace, limits: Limits) -> int:
    evaluation = evaluate_q3dnf(read_qdnf(args.formula), limits)
    if not evaluation.holds:
        print("FALSE")
        return 1
    print(f"TRUE x={evaluation.witness.to_bits()}")
    return 0


def cmd_normalize(args: argparse.Namespace, limits: Limits) -> int:
    result = normalize_with_trace(read_qdnf(args.formula))
    _emit(format_qdnf(result.formula, result.trace.to_comments()), args.out)
    return 0


def cmd_reduce(args: argparse.Namespace, limits: Limits) -> int:
    red = build_graph(normalize_with_trace(read_qdnf(args.formula)).formula)
    _emit(format_graph(red.graph, red.k), args.graph)
    if args.dot:
        _emit(to_dot(red.graph, name="reduction", group_of=role_group) + "\n", args.dot)
    logger.info("reduced to %d vertices, %d edges, k=%d", red.graph.num_vertices, red.graph.num_edges, red.k)
    return 0


def cmd_mis(args: argparse.Namespace, limits: Limits) -> int:
    graph = read_graph(args.graph).graph
    for members in enumerate_mis(graph, limits):
        print(graph.format_set(members))
    return 0


def cmd_min_transversal(args: argparse.Namespace, limits: Limits) -> int:
    graph = read_graph(args.graph).graph
    search = min_transversal(graph, limit=args.limit, limits=limits)
    if not search.found:
        print(INFEASIBLE)
        return 1
    print(f"size: {search.size}")
    print(f"set: {graph.format_set(search.vertex_set)}")
    return 0


def cmd_verify(args: argparse.Namespace, limits: Limits) -> int:
    graph = read_graph(args.graph).graph
    check = is_transversal(graph, _parse_set(graph, args.set), limits)
    if check.ok:
        print("TRANSVERSAL")
        return 0
    print("NOT-TRANSVERSAL")
    print(graph.format_set(check.counterexample))
    return 1


def cmd_roundtrip(args: argparse.Namespace, limits: Limits) -> int:
    report = round_trip(read_qdnf(args.formula), limits)
    sys.stdout.write(render_report([report.to_dict()]))
    return 0 if report.consistent else 1


def cmd_gen(args: argparse.Namespace, limits: Limits) -> int:
    if args.plain:
        formula = gen_q3dnf(args.n, args.m, args.q + args.qn, args.seed)
    else:
        formula = gen_nice_monotone(args.n, args.m, args.q, args.qn, args.seed, limits)
    kind = "plain" if args.plain else "nice"
    comment = f"gen {kind} n={args.n} m={args.m} q={args.q} qn={args.qn} seed={args.seed}"
    _emit(format_qdnf(formula, [comment]), args.out)
    return 0


def cmd_classify(args: argparse.Namespace, limits: Limits) -> int:
    graph_file = read_graph(args.graph)
    red = ReductionOutput.from_graph(graph_file.graph, graph_file.k)
    audit = classification_audit(red, limits)
    sys.stdout.write(render_report([audit.to_dict()]))
    return 0 if audit.ok else EXIT_INVARIANT


def cmd_suite(args: argparse.Namespace, limits: Limits) -> int:
    summary, blocks = run_suite(args.name, args.count, limits)
    sys.stdout.write(render_report(blocks if args.details else [], summary.to_dict()))
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversal-lab",
        allow_abbrev=False,
        description="Normalize, reduce and brute-force check quantified 3-DNF formulas against graph transversals.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    parser.add_argument("--max-vertices", type=int, help="enumeration bound on graph vertices")
    parser.add_argument("--max-variables", type=int, help="evaluation bound on n + m")
    parser.add_argument("--strict", action="store_true", help="check transversals before canonicalizing")
    commands = parser.add_subparsers(dest="command", required=True)

    command = commands.add_parser("eval", help="decide a formula")
    command.add_argument("formula")
    command.set_defaults(handler=cmd_eval)

    command = commands.add_parser("normalize", help="write the nice monotone width-3 form")
    command.add_argument("formula")
    command.add_argument("--out")
    command.set_defaults(handler=cmd_normalize)

    command = commands.add_parser("reduce", help="normalize and build the gadget graph")
    command.add_argument("formula")
    command.add_argument("--graph")
    command.add_argument("--dot")
    command.set_defaults(handler=cmd_reduce)

    command = commands.add_parser("mis", help="list maximal independent sets")
    command.add_argument("graph")
    command.set_defaults(handler=cmd_mis)

    command = commands.add_parser("min-transversal", help="exact minimum transversal")
    command.add_argument("graph")
    command.add_argument("--limit", type=int)
    command.set_defaults(handler=cmd_min_transversal)

    command = commands.add_parser("verify", help="check a transversal")
    command.add_argument("graph")
    command.add_argument("--set", required=True, help="comma-separated vertex labels or ids")
    command.set_defaults(handler=cmd_verify)

    command = commands.add_parser("roundtrip", help="check the reduction on one formula")
    command.add_argument("formula")
    command.set_defaults(handler=cmd_roundtrip)

    command = commands.add_parser("gen", help="generate a formula")
    command.add_argument("--n", type=int, required=True)
    command.add_argument("--m", type=int, required=True)
    command.add_argument("--q", type=int, required=True)
    command.add_argument("--qn", type=int, required=True)
    command.add_argument("--seed", type=int, required=True)
    command.add_argument("--plain", action="store_true", help="random polarities, q + qn terms")
    command.add_argument("--out")
    command.set_defaults(handler=cmd_gen)

    for name in ("classify", "audit"):
        command = commands.add_parser(name, help="classify the maximal independent sets of a reduced graph")
        command.add_argument("graph")
        command.set_defaults(handler=cmd_classify)

    command = commands.add_parser("suite", help="run an acceptance suite")
    command.add_argument("name", choices=sorted(SUITES))
    command.add_argument("--count", type=int)
    command.add_argument("--details", action="store_true", help="print every instance, not only the summary")
    command.set_defaults(handler=cmd_suite)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        int: Exit status (eval and verify mirror their answer; 2 parse, 3 precondition, 4 scale, 5 invariant)
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    limits = DEFAULT_LIMITS.with_overrides(
        max_graph_vertices=args.max_vertices,
        max_formula_variables=args.max_variables,
        strict_canonicalize=args.strict or None,
    )

    try:
        return args.handler(args, limits)
    except ParseError as error:
        print(f"parse error: {error}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as error:
        print(f"cannot read or write file: {error}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, GeneratorInfeasibleError) as error:
        print(f"precondition failed: {error}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ScaleLimitError as error:
        print(f"scale limit: {error}", file=sys.stderr)
        return EXIT_SCALE
    except InvariantError as error:
        logger.exception("internal invariant violated")
        print(f"invariant violated: {error}", file=sys.stderr)
        return EXIT_INVARIANT
    except LabError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
