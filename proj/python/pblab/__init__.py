"""Projective-bundle / hypersurface correspondence toolkit.

Thin Python facade over the C++ core. Polynomials are passed as strings
in the variables ``X0, X1, X2`` (sections) and parsed exactly, with
rational coefficients written ``p/q``.
"""

from ._core import (
    blowup,
    chow,
    groebner_basis,
    hypersurface,
    sample,
    validate_triple,
)

__all__ = [
    "blowup",
    "chow",
    "groebner_basis",
    "hypersurface",
    "sample",
    "validate_triple",
]
