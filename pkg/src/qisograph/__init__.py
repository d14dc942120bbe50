"""Finite-truncation verification toolkit for quantum isometric actions
on graph C*-algebra spectral triples."""

__version__ = "0.1.0"
