"""Exact computations for Griess algebras, Casimir vectors and trace formulae."""
from .exact import Poly, RatFunc, linsolve

__version__ = "0.1.0"
__all__ = ["Poly", "RatFunc", "linsolve"]
