"""Exact arithmetic for hyperbolic Heron triangles and their elliptic curves."""

__version__ = "0.1.0"
