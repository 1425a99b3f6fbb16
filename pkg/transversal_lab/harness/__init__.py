"""
Seeded generators, round-trip and audit experiments, and the named
acceptance suites.
"""
