"""
Transversal Lab - executable laboratory for the bipartite transversal reduction

Normalizes quantified 3-DNF formulas to nice monotone form, builds the
bipartite gadget graph, and checks by brute force that the formula holds
exactly when the graph has a transversal of size at most 2n + q + q'.
"""

__version__ = "0.1.0"
__author__ = "Transversal Lab Team"
__description__ = "Executable reduction from 2QBF to bipartite MIS transversals"
