"""Exact lozenge-tiling counts and gap correlations in a 60-degree corner."""

__version__ = "0.1.0"
