"""Sparse systems of parameters in and modulo polynomial ideals."""

__version__ = "0.1.0"
