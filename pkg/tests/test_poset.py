"""
Unit tests for the height-two poset view.
"""

import unittest
import sys
import os

# Add the parent directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from transversal_lab.exceptions import PreconditionError
from transversal_lab.graph.independent_sets import enumerate_mis, is_transversal
from transversal_lab.graph.labeled_graph import LabeledBipartiteGraph, Side, VertexSet, to_height_two_poset
from transversal_lab.graph.poset import comparability_graph, is_fibre, maximal_antichains


def crown():
    """The 6-vertex crown: p_i below n_j for i != j."""
    labels = ["p1", "p2", "p3", "n1", "n2", "n3"]
    edges = [(f"p{i}", f"n{j}") for i in range(1, 4) for j in range(1, 4) if i != j]
    sides = {label: Side.P if label.startswith("p") else Side.N for label in labels}
    return LabeledBipartiteGraph.from_labels(labels, edges, sides)


class TestPoset(unittest.TestCase):
    """Test cases for maximal antichains and fibres."""

    def setUp(self):
        """Set up test fixtures."""
        self.graph = crown()
        self.pairs = to_height_two_poset(self.graph)

    def test_pairs_go_up(self):
        """Test that every pair runs from P to N."""
        self.assertEqual(len(self.pairs), 6)
        for lower, upper in self.pairs:
            self.assertIs(self.graph.side(lower), Side.P)
            self.assertIs(self.graph.side(upper), Side.N)

    def test_antichains_are_independent_sets(self):
        """Test that maximal antichains equal the maximal independent sets."""
        antichains = maximal_antichains(self.pairs, self.graph.vertex_ids)
        self.assertEqual(antichains, enumerate_mis(self.graph))

    def test_fibre_is_transversal(self):
        """Test fibres against transversals on a few candidates."""
        for labels in (["p1", "n1"], ["p1", "p2", "p3"], ["p1"], []):
            candidate = self.graph.ids_of(labels)
            self.assertEqual(
                is_fibre(self.pairs, self.graph.vertex_ids, candidate),
                is_transversal(self.graph, candidate).ok,
            )

    def test_empty_poset(self):
        """Test that an empty poset has the empty antichain."""
        self.assertEqual(maximal_antichains([], []), [VertexSet()])

    def test_unknown_element(self):
        """Test that pairs must name known elements."""
        with self.assertRaises(PreconditionError):
            comparability_graph([(0, 9)], [0, 1])


if __name__ == '__main__':
    unittest.main()
