"""Finite quadratic geometry over F2 and the modular-form combinatorics built on it."""

from .f2space import QuadraticSpace

__version__ = "0.1.0"

__all__ = ["QuadraticSpace", "__version__"]
