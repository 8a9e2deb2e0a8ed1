"""Exact representation conversion for polyhedral cones with symmetry."""

__version__ = "0.1.0"
