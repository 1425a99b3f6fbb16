"""
Graph support for Transversal Lab.

Labeled graphs with an optional (P, N) bipartition, exact maximal
independent set enumeration, transversal checks and minimum transversal
search, the complement and poset views, and the `p graph` text format.
"""
