"""Complexity of reductive pairs: engines, registry, and classification tools."""

__version__ = "0.1.0"
