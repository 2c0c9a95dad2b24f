"""Exact arithmetic toolkit for the coset vertex operator algebras M^(n).

M^(n) is the commutant of the diagonal affine sl2 at level n+1 inside n+1
copies of the A_1 lattice VOA.  Submodules cover q-series, minimal models,
the symmetric-group quotient T^N, the weight-two algebra, the module
classification and the branching characters.
"""
from .errors import (
    BadIndex,
    BadLabel,
    CosetkitError,
    IncompatibleOffset,
    Inconclusive,
    NotAUnit,
    NumericalInconsistency,
    SearchExhausted,
    SizeLimit,
    TheoryViolation,
)

__version__ = "0.1.0"

__all__ = [
    "BadIndex",
    "BadLabel",
    "CosetkitError",
    "IncompatibleOffset",
    "Inconclusive",
    "NotAUnit",
    "NumericalInconsistency",
    "SearchExhausted",
    "SizeLimit",
    "TheoryViolation",
]
