"""Exact computer algebra for cofree tensor coalgebras, B-infinity products,
descent elements, and the double bialgebra of finite topologies.

Everything is computed over the rationals with exact arithmetic.
"""

from .exactlin import (
    AlgebraError,
    InputError,
    LinComb,
    Poly,
    Scalar,
    SizeBoundError,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "InputError",
    "LinComb",
    "Poly",
    "Scalar",
    "SizeBoundError",
    "__version__",
]
