"""Exact algebra: rationals, polynomials, rational and quasi-rational functions."""

from ._kernels import BACKEND
from .poly import BigRat, Poly, format_poly, poly_gcd, squarefree_decomposition, squarefree_part
from .quasi import QuasiPoly, QuasiRational
from .ratfn import RationalFn, factor, format_ratfn
from .sturm import count_real_roots, has_real_roots, sturm_sequence

__all__ = [
    "BACKEND",
    "BigRat",
    "Poly",
    "RationalFn",
    "QuasiPoly",
    "QuasiRational",
    "count_real_roots",
    "factor",
    "format_poly",
    "format_ratfn",
    "has_real_roots",
    "poly_gcd",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_sequence",
]
