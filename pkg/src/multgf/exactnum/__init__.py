"""Exact arithmetic: rationals, cyclotomic numbers, polynomials over them."""
from fractions import Fraction as Rational

from .cyclotomic import (
    ONE,
    ZERO,
    Cyc,
    cyc,
    cyc_abs_compare,
    cyc_abs_interval,
    cyc_is_root_of_unity,
    cyc_make,
    cyclotomic_coeffs,
    euler_phi,
    zeta,
)
from .poly import UniPoly, cyclotomic_poly, poly_gcd

__all__ = [
    "Rational",
    "Cyc",
    "ONE",
    "ZERO",
    "cyc",
    "cyc_make",
    "zeta",
    "euler_phi",
    "cyclotomic_coeffs",
    "cyclotomic_poly",
    "cyc_is_root_of_unity",
    "cyc_abs_interval",
    "cyc_abs_compare",
    "UniPoly",
    "poly_gcd",
]
