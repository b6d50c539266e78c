"""Finite-group formations: local definitions, satellites and a verification harness."""

__version__ = "0.1.0"
