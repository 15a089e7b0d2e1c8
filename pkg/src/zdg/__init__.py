"""Exact zero-divisor graph computations over Z_m."""

__version__ = "0.1.0"
