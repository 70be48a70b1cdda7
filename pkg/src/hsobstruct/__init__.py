"""Exact obstructions to embedding closed orientable 3-manifolds in the 4-sphere."""

__version__ = "0.1.0"
