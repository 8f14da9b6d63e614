"""Exact computation of sparse multiples of polynomials over Q and F_q."""

__version__ = "0.1.0"
