"""Noncommutative Cauchy-Binet, Capelli and Turnbull identities checked by
exact symbolic computation."""

from .coeffring import CoeffPoly
from .ncalgebra import NCAlgebra, NCElement, RelationSystem, SymmetryRule, algebra
from .ncmatrix import HSpec, NCMatrix, commutativity_class, nc_det
from .rings import ALPHA, BETA, INTEGERS, M2GF2, GF2Mat, NCRing

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "CoeffPoly", "GF2Mat", "HSpec", "INTEGERS", "M2GF2",
    "NCAlgebra", "NCElement", "NCMatrix", "NCRing", "RelationSystem",
    "SymmetryRule", "algebra", "commutativity_class", "nc_det",
]
