"""Finite fields, polynomials and rational functions over them."""

from .gf import FieldDesc, FqElem, fq_make, is_prime
from .ratfunc import INF, PartialFractions, Place, RatFunc, partial_fractions, place_valuation

__all__ = [
    "FieldDesc", "FqElem", "fq_make", "is_prime",
    "INF", "PartialFractions", "Place", "RatFunc", "partial_fractions", "place_valuation",
]
