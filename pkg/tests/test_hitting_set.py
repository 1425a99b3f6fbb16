"""
Unit tests for minimum transversal search.
"""

import unittest
import sys
import os

# Add the parent directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from transversal_lab.graph.hitting_set import INFEASIBLE, brute_force_min_transversal, min_transversal
from transversal_lab.graph.independent_sets import is_transversal
from transversal_lab.graph.labeled_graph import LabeledBipartiteGraph, VertexSet


def graph_of(labels, edges):
    return LabeledBipartiteGraph.from_labels(labels, edges)


class TestMinTransversal(unittest.TestCase):
    """Test cases for min_transversal."""

    def test_single_edge(self):
        """Test that both endpoints are needed."""
        graph = graph_of(["u", "v"], [("u", "v")])
        search = min_transversal(graph)
        self.assertTrue(search.found)
        self.assertEqual(search.size, 2)
        self.assertEqual(graph.format_set(search.vertex_set), "{u,v}")

    def test_path(self):
        """Test the path a-b-c, least optimum {a,b}."""
        graph = graph_of(["a", "b", "c"], [("a", "b"), ("b", "c")])
        search = min_transversal(graph)
        self.assertEqual(search.size, 2)
        self.assertEqual(graph.format_set(search.vertex_set), "{a,b}")

    def test_four_cycle(self):
        """Test the 4-cycle, least optimum {a,b}."""
        graph = graph_of(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        search = min_transversal(graph)
        self.assertEqual(search.size, 2)
        self.assertEqual(graph.format_set(search.vertex_set), "{a,b}")

    def test_isolated_vertex(self):
        """Test that an isolated vertex alone is a transversal."""
        graph = graph_of(["u", "v", "w"], [("u", "v")])
        search = min_transversal(graph)
        self.assertEqual(search.size, 1)
        self.assertEqual(graph.format_set(search.vertex_set), "{w}")

    def test_empty_graph(self):
        """Test that the zero-vertex graph has no transversal."""
        search = min_transversal(LabeledBipartiteGraph([], []))
        self.assertFalse(search.found)

    def test_limit(self):
        """Test the infeasible-within-limit answer."""
        graph = graph_of(["a", "b", "c"], [("a", "b"), ("b", "c")])
        search = min_transversal(graph, limit=1)
        self.assertFalse(search.found)
        self.assertEqual(search.limit, 1)
        self.assertEqual(INFEASIBLE, "INFEASIBLE-WITHIN-LIMIT")
        self.assertTrue(min_transversal(graph, limit=2).found)

    def test_matches_brute_force(self):
        """Test optimum and tie-break against exhaustive search on a few graphs."""
        graphs = [
            graph_of(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")]),
            graph_of(["a", "b", "c", "d", "e", "f"], [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("e", "f")]),
            graph_of(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("a", "d")]),
        ]
        for graph in graphs:
            search = min_transversal(graph)
            certified = brute_force_min_transversal(graph)
            self.assertEqual(search.size, certified.size)
            self.assertEqual(search.vertex_set, certified.vertex_set)
            self.assertTrue(is_transversal(graph, search.vertex_set).ok)

    def test_no_smaller_transversal(self):
        """Test that removing any vertex of the optimum breaks it."""
        graph = graph_of(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
        optimum = min_transversal(graph).vertex_set
        for vertex_id in optimum:
            smaller = VertexSet.of(optimum.members - {vertex_id})
            self.assertFalse(is_transversal(graph, smaller).ok)


if __name__ == '__main__':
    unittest.main()
