"""Exact summation identities for gibonacci sequences."""
from .errors import NotConverged, ZeroTerm
from .families import SumFamily
from .pointwise import IdentityCheck
from .seq import FIBONACCI, LUCAS, GibonacciParams, lam, term, term_block

__all__ = [
    "FIBONACCI",
    "LUCAS",
    "GibonacciParams",
    "IdentityCheck",
    "NotConverged",
    "SumFamily",
    "ZeroTerm",
    "lam",
    "term",
    "term_block",
]
