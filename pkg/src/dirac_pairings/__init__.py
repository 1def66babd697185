"""Exact Euler-Poincare, Dirac-index and elliptic pairings for equal-rank real reductive pairs."""

__version__ = "1.0.0"
