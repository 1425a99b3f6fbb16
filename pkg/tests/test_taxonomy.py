"""
Unit tests for the maximal independent set taxonomy.
"""

import unittest
from collections import Counter
import sys
import os

# Add the parent directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from transversal_lab.exceptions import PreconditionError
from transversal_lab.graph.independent_sets import enumerate_mis, is_maximal_independent
from transversal_lab.graph.labeled_graph import Side
from transversal_lab.logic.formula import Q3DNF
from transversal_lab.reduction.gadgets import build_graph
from transversal_lab.reduction.taxonomy import Classification, MisType, Taxonomy, classify_mis


def phi0():
    return Q3DNF.of(2, 1, [(1, 1, 3), (2, 2, 3), (-1, -1, -3), (-2, -2, -3)])


class TestClassify(unittest.TestCase):
    """Test cases for classifying single sets."""

    def setUp(self):
        """Set up test fixtures."""
        self.red = build_graph(phi0())
        self.taxonomy = Taxonomy(self.red)

    def classify_labels(self, labels):
        return self.taxonomy.classify(self.red.graph.ids_of(labels))

    def test_side(self):
        """Test that P is its own class member."""
        classification = self.taxonomy.classify(self.red.graph.side_members(Side.P))
        self.assertEqual(classification, Classification(MisType.SIDE, name="P"))

    def test_variable_gadget(self):
        """Test {a1, b1, bb1}."""
        self.assertEqual(
            self.classify_labels(["a1", "b1", "bb1"]),
            Classification(MisType.VARIABLE_GADGET, 1, "a,b,bbar"),
        )

    def test_term_gadget(self):
        """Test {t1, r1, s1}."""
        classification = self.classify_labels(["t1", "r1", "s1"])
        self.assertIs(classification.mis_type, MisType.POSITIVE_TERM_GADGET)
        self.assertEqual(classification.index, 1)
        self.assertEqual(str(classification), "type 6 index 1 t,r,s")

    def test_positive_star(self):
        """Test the star around a1 and xb1."""
        classification = self.classify_labels(["a1", "xb1", "x2", "y1", "t2"])
        self.assertIs(classification.mis_type, MisType.POSITIVE_STAR)
        self.assertEqual(classification.index, 1)

    def test_regular(self):
        """Test that a literal-only set is regular."""
        self.assertEqual(self.classify_labels(["x1", "x2", "yb1"]), Classification(MisType.REGULAR))
        self.assertEqual(str(Classification(MisType.REGULAR)), "type 1")

    def test_not_maximal(self):
        """Test that non-maximal sets are rejected when checked."""
        with self.assertRaises(PreconditionError) as context:
            self.classify_labels(["x1", "x2", "y1", "t1", "t2"])
        self.assertEqual(context.exception.condition, "not-maximal-independent")

    def test_classify_mis(self):
        """Test the one-shot helper."""
        members = self.red.graph.ids_of(["tn1", "rn1", "sn1"])
        self.assertIs(classify_mis(self.red, members).mis_type, MisType.NEGATIVE_TERM_GADGET)


class TestDefiningSets(unittest.TestCase):
    """Test cases for the defining sets of the non-regular classes."""

    def setUp(self):
        """Set up test fixtures."""
        self.red = build_graph(phi0())
        self.taxonomy = Taxonomy(self.red)

    def test_count(self):
        """Test 2 + 6n + 2q + 2q' defining sets."""
        self.assertEqual(len(self.taxonomy.defining_sets()), 22)

    def test_all_maximal_independent(self):
        """Test that every defining set is a maximal independent set."""
        for classification, members in self.taxonomy.defining_sets():
            self.assertTrue(is_maximal_independent(self.red.graph, members), str(classification))

    def test_defining_sets_meet_hubs(self):
        """Test that every defining set contains a hub vertex."""
        for classification, members in self.taxonomy.defining_sets():
            self.assertFalse(self.taxonomy.is_regular(members), str(classification))

    def test_every_mis_classified(self):
        """Test the class counts over all maximal independent sets."""
        counts = Counter(self.taxonomy.classify(members, check=False).mis_type for members in enumerate_mis(self.red.graph))
        for mis_type, expected in (
            (MisType.SIDE, 2),
            (MisType.VARIABLE_GADGET, 8),
            (MisType.POSITIVE_STAR, 2),
            (MisType.NEGATIVE_STAR, 2),
            (MisType.POSITIVE_TERM_GADGET, 2),
            (MisType.POSITIVE_TERM_SPREAD, 2),
            (MisType.NEGATIVE_TERM_GADGET, 2),
            (MisType.NEGATIVE_TERM_SPREAD, 2),
        ):
            self.assertEqual(counts[mis_type], expected, mis_type.name)
        self.assertGreater(counts[MisType.REGULAR], 0)


if __name__ == '__main__':
    unittest.main()
