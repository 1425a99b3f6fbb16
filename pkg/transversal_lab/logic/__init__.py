"""
Quantified 3-DNF formulas for Transversal Lab.

This package holds the formula model with its brute-force oracle, the
normalization passes, and the `p qdnf` text format.
"""
