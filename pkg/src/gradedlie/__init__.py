"""Exact computations with cyclically graded semisimple Lie algebras."""

__version__ = "0.1.0"
