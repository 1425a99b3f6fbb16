"""
Simple undirected graphs with unique vertex labels and an optional (P, N) bipartition.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import PreconditionError


class Side(Enum):
    """Bipartition side of a vertex."""

    P = "P"
    N = "N"
    U = "U"


@dataclass(frozen=True)
class Vertex:
    """
    A graph vertex.

    Attributes:
        vertex_id: Integer id, unique in its graph
        label: Display label, unique in its graph
        side: Bipartition side, U when unassigned
    """

    vertex_id: int
    label: str
    side: Side = Side.U


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex ids; canonical order compares the sorted id tuples."""

    members: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        return cls(frozenset(members))

    @property
    def ordered(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    def __lt__(self, other: "VertexSet") -> bool:
        return self.ordered < other.ordered

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ordered)

    def __contains__(self, vertex_id: object) -> bool:
        return vertex_id in self.members

    def isdisjoint(self, other: Iterable[int]) -> bool:
        return self.members.isdisjoint(other)


class LabeledBipartiteGraph:
    """
    Immutable labeled graph backed by a frozen networkx graph.

    Vertices keep their label and side as node attributes. Bit position i
    of every adjacency mask stands for the i-th smallest vertex id.
    """

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Tuple[int, int]]):
        graph = nx.Graph()
        labels: Dict[str, int] = {}
        for vertex in sorted(vertices, key=lambda item: item.vertex_id):
            if vertex.vertex_id in graph:
                raise PreconditionError("duplicate-vertex-id", str(vertex.vertex_id))
            if vertex.label in labels:
                raise PreconditionError("duplicate-label", vertex.label)
            labels[vertex.label] = vertex.vertex_id
            graph.add_node(vertex.vertex_id, label=vertex.label, side=vertex.side)

        for u, v in edges:
            if u == v:
                raise PreconditionError("self-loop", f"vertex {u}")
            if u not in graph or v not in graph:
                raise PreconditionError("unknown-vertex", f"edge {u}-{v}")
            graph.add_edge(u, v)

        self._graph = nx.freeze(graph)
        self._labels = labels
        self._ids: Tuple[int, ...] = tuple(sorted(graph.nodes))
        self._position = {vertex_id: index for index, vertex_id in enumerate(self._ids)}
        self._masks = tuple(
            sum(1 << self._position[neighbor] for neighbor in graph.adj[vertex_id]) for vertex_id in self._ids
        )

        if self.is_fully_bipartitioned():
            for u, v in graph.edges:
                if graph.nodes[u]["side"] == graph.nodes[v]["side"]:
                    raise PreconditionError(
                        "not-bipartite", f"edge {self.label(u)}-{self.label(v)} stays inside side {graph.nodes[u]['side'].value}"
                    )

    @classmethod
    def from_labels(
        cls,
        labels: Sequence[str],
        edges: Iterable[Tuple[str, str]],
        sides: Optional[Dict[str, Side]] = None,
    ) -> "LabeledBipartiteGraph":
        """Build a graph from labels; ids follow the order of labels starting at 0."""
        sides = sides or {}
        ids = {label: index for index, label in enumerate(labels)}
        vertices = [Vertex(ids[label], label, sides.get(label, Side.U)) for label in labels]
        return cls(vertices, [(ids[u], ids[v]) for u, v in edges])

    @property
    def nx_graph(self) -> nx.Graph:
        """The frozen networkx graph."""
        return self._graph

    @property
    def vertex_ids(self) -> Tuple[int, ...]:
        return self._ids

    @property
    def num_vertices(self) -> int:
        return len(self._ids)

    @property
    def num_edges(self) -> int:
        return self._graph.number_of_edges()

    def vertices(self) -> List[Vertex]:
        return [Vertex(vertex_id, self.label(vertex_id), self.side(vertex_id)) for vertex_id in self._ids]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (smaller id, larger id), sorted."""
        return sorted((min(u, v), max(u, v)) for u, v in self._graph.edges)

    def label(self, vertex_id: int) -> str:
        self._require(vertex_id)
        return self._graph.nodes[vertex_id]["label"]

    def side(self, vertex_id: int) -> Side:
        self._require(vertex_id)
        return self._graph.nodes[vertex_id]["side"]

    def id_of(self, label: str) -> int:
        if label not in self._labels:
            raise PreconditionError("unknown-label", label)
        return self._labels[label]

    def ids_of(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet.of(self.id_of(label) for label in labels)

    def has_label(self, label: str) -> bool:
        return label in self._labels

    def has_vertex(self, vertex_id: int) -> bool:
        return vertex_id in self._position

    def has_edge(self, u: int, v: int) -> bool:
        return self._graph.has_edge(u, v)

    def neighbors(self, vertex_id: int) -> FrozenSet[int]:
        self._require(vertex_id)
        return frozenset(self._graph.adj[vertex_id])

    def side_members(self, side: Side) -> VertexSet:
        return VertexSet.of(vertex_id for vertex_id in self._ids if self.side(vertex_id) is side)

    def is_fully_bipartitioned(self) -> bool:
        return all(self._graph.nodes[vertex_id]["side"] is not Side.U for vertex_id in self._ids)

    def check_members(self, vertex_set: VertexSet) -> None:
        """Raise unless every member is a vertex of this graph."""
        unknown = [vertex_id for vertex_id in vertex_set.members if vertex_id not in self._position]
        if unknown:
            raise PreconditionError("unknown-vertex", ", ".join(str(vertex_id) for vertex_id in sorted(unknown)))

    def mask_of(self, vertex_set: Iterable[int]) -> int:
        """Bitmask of a vertex set over this graph's id order."""
        mask = 0
        for vertex_id in vertex_set:
            self._require(vertex_id)
            mask |= 1 << self._position[vertex_id]
        return mask

    def set_of(self, mask: int) -> VertexSet:
        """Inverse of mask_of."""
        return VertexSet.of(self._ids[index] for index in range(len(self._ids)) if mask >> index & 1)

    def neighbor_mask(self, vertex_id: int) -> int:
        self._require(vertex_id)
        return self._masks[self._position[vertex_id]]

    def format_set(self, vertex_set: VertexSet) -> str:
        """Render a set with labels in id order, e.g. '{a,c}'."""
        return "{" + ",".join(self.label(vertex_id) for vertex_id in vertex_set.ordered) + "}"

    def _require(self, vertex_id: int) -> None:
        if vertex_id not in self._position:
            raise PreconditionError("unknown-vertex", str(vertex_id))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledBipartiteGraph):
            return NotImplemented
        return self.vertices() == other.vertices() and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((tuple(self.vertices()), tuple(self.edges())))

    def __repr__(self):
        return f"LabeledBipartiteGraph(|V|={self.num_vertices}, |E|={self.num_edges})"


def complement(graph: LabeledBipartiteGraph) -> LabeledBipartiteGraph:
    """
    Complement graph with sides cleared.

    The maximal cliques of the result are exactly the maximal independent
    sets of the input.
    """
    vertices = [Vertex(vertex.vertex_id, vertex.label, Side.U) for vertex in graph.vertices()]
    return LabeledBipartiteGraph(vertices, nx.complement(graph.nx_graph).edges)


def to_height_two_poset(graph: LabeledBipartiteGraph) -> List[Tuple[int, int]]:
    """
    Height-two poset whose comparability graph is the input.

    Args:
        graph: A fully bipartitioned graph

    Returns:
        Sorted cover pairs (lower, upper) with lower on side P and upper on side N
    """
    if not graph.is_fully_bipartitioned():
        raise PreconditionError("unassigned-sides", "the poset view needs every vertex on side P or N")
    pairs = []
    for u, v in graph.edges():
        lower, upper = (u, v) if graph.side(u) is Side.P else (v, u)
        pairs.append((lower, upper))
    return sorted(pairs)
