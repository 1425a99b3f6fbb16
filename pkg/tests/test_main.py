"""
Unit tests for the command-line entry point.
"""

import unittest
import tempfile
import io
from contextlib import redirect_stdout
import sys
import os

# Add the parent directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from transversal_lab.main import main

PHI0_TEXT = "p qdnf 2 1 4\nt 1 1 3\nt 2 2 3\nt -1 -1 -3\nt -2 -2 -3\n"
FALSE_TEXT = "p qdnf 1 1 2\nt 1 1 2\nt -1 -1 -2\n"
PATH_TEXT = "p graph 3 2\nv 0 U a\nv 1 U b\nv 2 U c\ne 0 1\ne 1 2\n"


class TestMain(unittest.TestCase):
    """Test cases for the subcommands and exit codes."""

    def setUp(self):
        """Set up test fixtures."""
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, text):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    def run_main(self, *argv):
        output = io.StringIO()
        with redirect_stdout(output):
            status = main(list(argv))
        return status, output.getvalue()

    def test_eval_true(self):
        """Test the least witness of the worked formula."""
        status, output = self.run_main("eval", self.write("phi0.qdnf", PHI0_TEXT))
        self.assertEqual(status, 0)
        self.assertEqual(output, "TRUE x=01\n")

    def test_eval_false(self):
        """Test a false formula."""
        status, output = self.run_main("eval", self.write("false.qdnf", FALSE_TEXT))
        self.assertEqual(status, 1)
        self.assertEqual(output, "FALSE\n")

    def test_parse_error(self):
        """Test that malformed files exit with 2."""
        status, _ = self.run_main("eval", self.write("bad.qdnf", "p qdnf 1 1 1\nt 1 2\n"))
        self.assertEqual(status, 2)

    def test_missing_file(self):
        """Test that unreadable files exit with 2."""
        status, _ = self.run_main("eval", os.path.join(self.directory.name, "absent.qdnf"))
        self.assertEqual(status, 2)

    def test_normalize(self):
        """Test that the trace is written as comments."""
        status, output = self.run_main("normalize", self.write("false.qdnf", FALSE_TEXT))
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("# "))
        self.assertIn("p qdnf 1 5 6", output)

    def test_reduce(self):
        """Test the graph file of the worked formula."""
        status, output = self.run_main("reduce", self.write("phi0.qdnf", PHI0_TEXT))
        self.assertEqual(status, 0)
        lines = output.splitlines()
        self.assertEqual(lines[0], "p graph 26 " + lines[0].split()[3])
        self.assertEqual(sum(1 for line in lines if line.startswith("v ")), 26)
        self.assertEqual(lines[-1], "k 8")

    def test_reduce_without_existentials(self):
        """Test that n = 0 is a precondition failure."""
        status, _ = self.run_main("reduce", self.write("empty.qdnf", "p qdnf 0 1 1\nt 1 1 1\n"))
        self.assertEqual(status, 3)

    def test_reduce_then_classify(self):
        """Test classifying a reduced graph read back from disk."""
        graph_path = os.path.join(self.directory.name, "phi0.graph")
        dot_path = os.path.join(self.directory.name, "phi0.dot")
        status, _ = self.run_main("reduce", self.write("phi0.qdnf", PHI0_TEXT), "--graph", graph_path, "--dot", dot_path)
        self.assertEqual(status, 0)
        with open(dot_path, encoding="utf-8") as handle:
            self.assertIn("graph reduction", handle.read())
        status, output = self.run_main("classify", graph_path)
        self.assertEqual(status, 0)
        self.assertIn("scope: full", output)
        self.assertIn("unclassified: 0", output)

    def test_mis(self):
        """Test the maximal independent sets of a path in canonical order."""
        status, output = self.run_main("mis", self.write("path.graph", PATH_TEXT))
        self.assertEqual(status, 0)
        self.assertEqual(output, "{a,c}\n{b}\n")

    def test_min_transversal(self):
        """Test the optimum and the limit."""
        path = self.write("path.graph", PATH_TEXT)
        status, output = self.run_main("min-transversal", path)
        self.assertEqual(status, 0)
        self.assertEqual(output, "size: 2\nset: {a,b}\n")
        status, output = self.run_main("min-transversal", path, "--limit", "1")
        self.assertEqual(status, 1)
        self.assertEqual(output, "INFEASIBLE-WITHIN-LIMIT\n")

    def test_verify(self):
        """Test both answers of verify."""
        path = self.write("path.graph", PATH_TEXT)
        status, output = self.run_main("verify", path, "--set", "b")
        self.assertEqual(status, 1)
        self.assertEqual(output, "NOT-TRANSVERSAL\n{a,c}\n")
        status, output = self.run_main("verify", path, "--set", "0,b")
        self.assertEqual(status, 0)
        self.assertEqual(output, "TRANSVERSAL\n")

    def test_verify_unknown_vertex(self):
        """Test that unknown vertices are a precondition failure."""
        status, _ = self.run_main("verify", self.write("path.graph", PATH_TEXT), "--set", "z")
        self.assertEqual(status, 3)

    def test_scale_limit(self):
        """Test that the vertex bound exits with 4."""
        status, _ = self.run_main("--max-vertices", "2", "mis", self.write("path.graph", PATH_TEXT))
        self.assertEqual(status, 4)

    def test_roundtrip(self):
        """Test the report of the worked formula."""
        status, output = self.run_main("roundtrip", self.write("phi0.qdnf", PHI0_TEXT))
        self.assertEqual(status, 0)
        self.assertIn("witness: 01", output)
        self.assertIn("consistent: true", output)

    def test_gen_deterministic(self):
        """Test that gen repeats itself for a fixed seed."""
        argv = ("gen", "--n", "2", "--m", "1", "--q", "2", "--qn", "2", "--seed", "7")
        first = self.run_main(*argv)
        second = self.run_main(*argv)
        self.assertEqual(first, second)
        self.assertEqual(first[0], 0)
        self.assertTrue(first[1].startswith("# gen nice n=2 m=1 q=2 qn=2 seed=7\np qdnf 2 1 4\n"))

    def test_gen_output_is_accepted(self):
        """Test that a generated file is read unchanged by eval, reduce and roundtrip."""
        path = os.path.join(self.directory.name, "gen.qdnf")
        status, _ = self.run_main("gen", "--n", "2", "--m", "1", "--q", "2", "--qn", "2", "--seed", "7", "--out", path)
        self.assertEqual(status, 0)
        status, output = self.run_main("eval", path)
        self.assertIn(status, (0, 1))
        self.assertTrue(output.startswith("TRUE x=") or output == "FALSE\n")
        status, output = self.run_main("reduce", path)
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("p graph "))
        status, output = self.run_main("roundtrip", path)
        self.assertEqual(status, 0)
        self.assertIn("consistent: true", output)

    def test_normalize_output_is_accepted(self):
        """Test that a normalized file is read unchanged by eval, reduce and roundtrip."""
        path = os.path.join(self.directory.name, "normal.qdnf")
        status, _ = self.run_main("normalize", self.write("false.qdnf", FALSE_TEXT), "--out", path)
        self.assertEqual(status, 0)
        status, output = self.run_main("eval", path)
        self.assertEqual(status, 1)
        self.assertEqual(output, "FALSE\n")
        status, output = self.run_main("reduce", path)
        self.assertEqual(status, 0)
        self.assertEqual(output.splitlines()[-1], "k 8")
        status, output = self.run_main("roundtrip", path)
        self.assertEqual(status, 0)
        self.assertIn("consistent: true", output)

    def test_reduced_graph_is_accepted(self):
        """Test that a reduced graph file is read back by min-transversal."""
        graph_path = os.path.join(self.directory.name, "phi0.graph")
        status, _ = self.run_main("reduce", self.write("phi0.qdnf", PHI0_TEXT), "--graph", graph_path)
        self.assertEqual(status, 0)
        status, output = self.run_main("min-transversal", graph_path, "--limit", "8")
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith("size: 8\n"))

    def test_gen_infeasible(self):
        """Test that impossible counts exit with 3."""
        status, _ = self.run_main("gen", "--n", "1", "--m", "0", "--q", "1", "--qn", "1", "--seed", "0")
        self.assertEqual(status, 3)

    def test_suite(self):
        """Test a short suite run."""
        status, output = self.run_main("suite", "A7", "--count", "3")
        self.assertEqual(status, 0)
        self.assertIn("instances: 3", output)


if __name__ == '__main__':
    unittest.main()
