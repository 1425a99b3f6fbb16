"""
Unit tests for Transversal Lab.
"""
