"""Exact-arithmetic laboratory for Colombeau singularity models."""

__version__ = "0.1.0"
