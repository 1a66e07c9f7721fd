"""Computational ordered groups: Magnus bi-orders on free groups, kernel
rewriting over a left-orderable oracle, bi-ordered fiber products, and
finite-quotient / homology / generalized-torsion checks for finitely
presented groups."""

__version__ = "0.1.0"
