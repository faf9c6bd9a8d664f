"""Exact symbolic engine for type-A quantum groups at a root of unity."""

from . import scalars, weights, qalgebra, qmatrix, koszul, cohomology, invariants

__all__ = [
    "scalars", "weights", "qalgebra", "qmatrix", "koszul",
    "cohomology", "invariants",
]
