"""Graded skew-gentle algebras, arc objects and intersection-Hom comparisons."""

__version__ = "0.1.0"
