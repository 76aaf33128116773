"""Truncated series, rational reconstruction and closed forms."""
from .eisenstein import EisensteinReport, eisenstein_denominator
from .reconstruct import (
    PADE_MARGIN,
    PoleCertificate,
    degree_bounds,
    multisection,
    pade_reconstruct,
    poles_at_roots_of_unity,
    rec_from_rational,
    sarkozy_series,
    universal_denominator,
)
from .series import RationalFunction, TruncatedSeries, series_from_mf

__all__ = [
    "EisensteinReport", "eisenstein_denominator", "PADE_MARGIN", "PoleCertificate", "degree_bounds",
    "multisection", "pade_reconstruct", "poles_at_roots_of_unity", "rec_from_rational", "sarkozy_series",
    "universal_denominator", "RationalFunction", "TruncatedSeries", "series_from_mf",
]
