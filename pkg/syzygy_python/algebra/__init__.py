"""Exact commutative algebra: fields, polynomials, Gröbner bases and resolutions."""

from .fields import FieldSpec
from .polynomial import MonomialOrder, Ring, Polynomial, parse_polynomial
from .groebner import Ideal, eliminate, kernel_of_ring_map
from .resolution import FreeResolution, free_resolution, betti_table, numeric_invariants

__all__ = [
    "FieldSpec",
    "MonomialOrder",
    "Ring",
    "Polynomial",
    "parse_polynomial",
    "Ideal",
    "eliminate",
    "kernel_of_ring_map",
    "FreeResolution",
    "free_resolution",
    "betti_table",
    "numeric_invariants",
]
