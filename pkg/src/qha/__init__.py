"""Homological invariants and dimension bounds for monomial quiver algebras."""

__version__ = "0.1.0"
