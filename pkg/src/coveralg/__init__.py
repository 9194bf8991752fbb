"""Vertex cover algebras of weighted simplicial complexes, exactly."""

__version__ = "0.1.0"

from .complexes import CoverPoint, WeightedComplex
from .monomial import MonomialIdeal

__all__ = ["CoverPoint", "MonomialIdeal", "WeightedComplex", "__version__"]
