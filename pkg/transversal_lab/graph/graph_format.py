"""
Reader and writer for the `p graph` format, and DOT export.

    p graph <#vertices> <#edges>
    v <id> <P|N|U> <label>
    e <id> <id>
    k <value>          optional budget sidecar written by `reduce`
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import graphviz

from ..exceptions import ParseError, PreconditionError
from .labeled_graph import LabeledBipartiteGraph, Side, Vertex

# fill colors cycled over DOT groups
_PALETTE = (
    "lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan", "wheat",
)


@dataclass(frozen=True)
class GraphFile:
    """A parsed graph file: the graph and the optional budget line."""

    graph: LabeledBipartiteGraph
    k: Optional[int] = None


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line_number)


def parse_graph(text: str) -> GraphFile:
    """
    Parse a graph file.

    Args:
        text: File contents

    Returns:
        GraphFile with the graph and the k sidecar if present

    Raises:
        ParseError: With the offending line number
    """
    header = None
    header_line = 0
    vertices: List[Vertex] = []
    id_lines: Dict[int, int] = {}
    label_lines: Dict[str, int] = {}
    edges: List[Tuple[int, int]] = []
    edge_lines: List[int] = []
    k = None

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]

        if kind == "p":
            if header is not None:
                raise ParseError("duplicate header", line_number)
            if len(tokens) != 4 or tokens[1] != "graph":
                raise ParseError("header must read 'p graph <#vertices> <#edges>'", line_number)
            header = (_parse_int(tokens[2], line_number, "vertex count"), _parse_int(tokens[3], line_number, "edge count"))
            header_line = line_number
        elif header is None:
            raise ParseError(f"'{kind}' line before header", line_number)
        elif kind == "v":
            if len(tokens) != 4:
                raise ParseError("vertex line must read 'v <id> <P|N|U> <label>'", line_number)
            vertex_id = _parse_int(tokens[1], line_number, "vertex id")
            try:
                side = Side(tokens[2])
            except ValueError:
                raise ParseError(f"side must be P, N or U, got {tokens[2]!r}", line_number)
            if vertex_id in id_lines:
                raise ParseError(f"vertex id {vertex_id} already defined on line {id_lines[vertex_id]}", line_number)
            if tokens[3] in label_lines:
                raise ParseError(f"label {tokens[3]!r} already defined on line {label_lines[tokens[3]]}", line_number)
            id_lines[vertex_id] = line_number
            label_lines[tokens[3]] = line_number
            vertices.append(Vertex(vertex_id, tokens[3], side))
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError("edge line must read 'e <id> <id>'", line_number)
            edges.append((_parse_int(tokens[1], line_number, "vertex id"), _parse_int(tokens[2], line_number, "vertex id")))
            edge_lines.append(line_number)
        elif kind == "k":
            if len(tokens) != 2 or k is not None:
                raise ParseError("expected a single 'k <value>' line", line_number)
            k = _parse_int(tokens[1], line_number, "k")
        else:
            raise ParseError(f"unknown line type {kind!r}", line_number)

    if header is None:
        raise ParseError("missing 'p graph' header")
    if len(vertices) != header[0]:
        raise ParseError(f"header announces {header[0]} vertices, found {len(vertices)}", header_line)
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}", header_line)

    sides = {vertex.vertex_id: vertex.side for vertex in vertices}
    fully_sided = all(side is not Side.U for side in sides.values())
    seen: Dict[FrozenSet[int], int] = {}
    for (u, v), line_number in zip(edges, edge_lines):
        if u not in sides or v not in sides:
            raise ParseError(f"edge {u}-{v} names an unknown vertex", line_number)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", line_number)
        pair = frozenset((u, v))
        if pair in seen:
            raise ParseError(f"edge {u}-{v} repeats line {seen[pair]}", line_number)
        seen[pair] = line_number
        if fully_sided and sides[u] is sides[v]:
            raise ParseError(f"edge {u}-{v} stays inside side {sides[u].value}", line_number)
    try:
        graph = LabeledBipartiteGraph(vertices, edges)
    except PreconditionError as error:
        raise ParseError(str(error), header_line)
    return GraphFile(graph, k)


def format_graph(graph: LabeledBipartiteGraph, k: Optional[int] = None) -> str:
    """Serialize a graph, vertices and edges in id order, with an optional k line."""
    lines = [f"p graph {graph.num_vertices} {graph.num_edges}"]
    for vertex in graph.vertices():
        lines.append(f"v {vertex.vertex_id} {vertex.side.value} {vertex.label}")
    for u, v in graph.edges():
        lines.append(f"e {u} {v}")
    if k is not None:
        lines.append(f"k {k}")
    return "\n".join(lines) + "\n"


def to_dot(
    graph: LabeledBipartiteGraph,
    name: str = "G",
    group_of: Optional[Callable[[str], str]] = None,
) -> str:
    """
    DOT source for a graph.

    P-side vertices share one rank and N-side vertices the other; labels
    are written verbatim. With group_of, vertices whose labels map to the
    same group get the same DOT group and fill color.

    Args:
        graph: The graph
        name: DOT graph name
        group_of: Optional label -> group key

    Returns:
        str: DOT source
    """
    dot = graphviz.Graph(name=name, graph_attr={"rankdir": "TB"}, node_attr={"shape": "circle"})
    colors: Dict[str, str] = {}

    def node_attrs(label: str) -> Dict[str, str]:
        if group_of is None:
            return {}
        group = group_of(label)
        if group not in colors:
            colors[group] = _PALETTE[len(colors) % len(_PALETTE)]
        return {"group": group, "style": "filled", "fillcolor": colors[group]}

    for side in (Side.P, Side.N):
        members = graph.side_members(side)
        if not members:
            continue
        with dot.subgraph(name=f"side_{side.value}") as rank:
            rank.attr(rank="same")
            for vertex_id in members:
                label = graph.label(vertex_id)
                rank.node(str(vertex_id), label=label, **node_attrs(label))
    for vertex_id in graph.side_members(Side.U):
        label = graph.label(vertex_id)
        dot.node(str(vertex_id), label=label, **node_attrs(label))
    for u, v in graph.edges():
        dot.edge(str(u), str(v))
    return dot.source


def read_graph(path: str) -> GraphFile:
    """Read and parse a graph file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def write_graph(path: str, graph: LabeledBipartiteGraph, k: Optional[int] = None) -> None:
    """Write a graph file."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_graph(graph, k))
