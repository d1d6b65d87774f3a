"""Finite-algebra workbench for duplication-based product representations."""

__version__ = "0.1.0"
