"""Exact computations with Artin-Schreier curves and their automorphism p-groups."""

__version__ = "0.1.0"
