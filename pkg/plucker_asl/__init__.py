"""Exact verification of straightening laws for Plücker ideals."""

__version__ = "0.1.0"
