"""Exact lattice and character computations for A5 acting on K3 surfaces."""

__version__ = "0.1.0"
