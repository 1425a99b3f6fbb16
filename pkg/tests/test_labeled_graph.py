"""
Unit tests for labeled graphs and their views.
"""

import unittest
import sys
import os

# Add the parent directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from transversal_lab.exceptions import PreconditionError
from transversal_lab.graph.labeled_graph import (
    LabeledBipartiteGraph,
    Side,
    Vertex,
    VertexSet,
    complement,
    to_height_two_poset,
)


def path_graph():
    return LabeledBipartiteGraph.from_labels(["a", "b", "c"], [("a", "b"), ("b", "c")])


class TestVertexSet(unittest.TestCase):
    """Test cases for VertexSet."""

    def test_canonical_order(self):
        """Test that sets compare by sorted id tuples."""
        sets = sorted([VertexSet.of([1]), VertexSet.of([2, 0]), VertexSet.of([0, 1, 2])])
        self.assertEqual([members.ordered for members in sets], [(0, 1, 2), (0, 2), (1,)])

    def test_iteration_sorted(self):
        """Test iteration in id order."""
        self.assertEqual(list(VertexSet.of([3, 1, 2])), [1, 2, 3])
        self.assertIn(3, VertexSet.of([3]))


class TestLabeledBipartiteGraph(unittest.TestCase):
    """Test cases for LabeledBipartiteGraph."""

    def setUp(self):
        """Set up test fixtures."""
        self.graph = path_graph()

    def test_basic_accessors(self):
        """Test ids, labels and adjacency."""
        self.assertEqual(self.graph.vertex_ids, (0, 1, 2))
        self.assertEqual(self.graph.num_edges, 2)
        self.assertEqual(self.graph.label(2), "c")
        self.assertEqual(self.graph.id_of("b"), 1)
        self.assertTrue(self.graph.has_label("a"))
        self.assertTrue(self.graph.has_edge(1, 0))
        self.assertEqual(self.graph.neighbors(1), frozenset({0, 2}))
        self.assertEqual(self.graph.edges(), [(0, 1), (1, 2)])

    def test_masks(self):
        """Test bitmasks over id order."""
        self.assertEqual(self.graph.mask_of([0, 2]), 0b101)
        self.assertEqual(self.graph.set_of(0b101), VertexSet.of([0, 2]))
        self.assertEqual(self.graph.neighbor_mask(1), 0b101)

    def test_format_set(self):
        """Test label rendering of sets."""
        self.assertEqual(self.graph.format_set(VertexSet.of([2, 0])), "{a,c}")

    def test_unknown_member(self):
        """Test that sets must be bound to the graph."""
        with self.assertRaises(PreconditionError):
            self.graph.check_members(VertexSet.of([7]))

    def test_duplicate_label(self):
        """Test that labels are unique."""
        with self.assertRaises(PreconditionError):
            LabeledBipartiteGraph([Vertex(0, "a"), Vertex(1, "a")], [])

    def test_self_loop(self):
        """Test that self-loops are rejected."""
        with self.assertRaises(PreconditionError):
            LabeledBipartiteGraph([Vertex(0, "a")], [(0, 0)])

    def test_bipartite_witness(self):
        """Test that fully assigned sides must be respected by every edge."""
        with self.assertRaises(PreconditionError) as context:
            LabeledBipartiteGraph.from_labels(["u", "v"], [("u", "v")], {"u": Side.P, "v": Side.P})
        self.assertEqual(context.exception.condition, "not-bipartite")

    def test_equality(self):
        """Test structural equality."""
        self.assertEqual(self.graph, path_graph())
        self.assertEqual(hash(self.graph), hash(path_graph()))


class TestViews(unittest.TestCase):
    """Test cases for the complement and poset views."""

    def test_complement_of_edge(self):
        """Test that an edge complements to two isolated vertices."""
        edge = LabeledBipartiteGraph.from_labels(["u", "v"], [("u", "v")], {"u": Side.P, "v": Side.N})
        result = complement(edge)
        self.assertEqual(result.num_edges, 0)
        self.assertEqual(result.side(0), Side.U)

    def test_complement_involution(self):
        """Test complement(complement(g)) == g for unassigned sides."""
        self.assertEqual(complement(complement(path_graph())), path_graph())

    def test_poset_pairs(self):
        """Test the cover pairs of x1 - xb1."""
        edge = LabeledBipartiteGraph.from_labels(["xb1", "x1"], [("x1", "xb1")], {"x1": Side.P, "xb1": Side.N})
        self.assertEqual(to_height_two_poset(edge), [(1, 0)])

    def test_edgeless_poset(self):
        """Test that an edgeless graph gives the empty relation."""
        graph = LabeledBipartiteGraph([Vertex(0, "p", Side.P), Vertex(1, "n", Side.N)], [])
        self.assertEqual(to_height_two_poset(graph), [])

    def test_poset_needs_sides(self):
        """Test the precondition on unassigned sides."""
        with self.assertRaises(PreconditionError):
            to_height_two_poset(path_graph())


if __name__ == '__main__':
    unittest.main()
