"""Brute-force reference sums.

Every summand is written out exactly as it appears on the left of its
identity and accumulated one term at a time.  Weight powers are recomputed
from scratch for each term.  Nothing here may import the closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ZeroTerm
from .families import SumFamily
from .seq import GibonacciParams, cache_for

__all__ = [
    "OracleResult",
    "window_product",
    "summand",
    "direct_sum",
    "partial_sums",
    "reciprocal_series_term",
]


@dataclass(frozen=True)
class OracleResult:
    value: Optional[Fraction]
    terms_evaluated: int
    zero_hit: Optional[int] = None


def window_product(params: GibonacciParams, j: int, offsets) -> int:
    G = cache_for(params)
    out = 1
    for o in offsets:
        out *= G[j + o]
    return out


def _recip_window(params: GibonacciParams, j: int, offsets) -> int:
    G = cache_for(params)
    out = 1
    for o in offsets:
        if G[j + o] == 0:
            raise ZeroTerm(j + o)
        out *= G[j + o]
    return out


def summand(
    family: SumFamily,
    params: GibonacciParams,
    j: int,
    n: int,
    t: int = 0,
    m: int = 0,
    r: int = 2,
    s: int = 0,
) -> int | Fraction:
    """The ``j``-th term of ``family``'s left side (some weights depend on ``n``)."""
    G = cache_for(params)
    F = cache_for(GibonacciParams(0, 1))
    if family is SumFamily.LINEAR:
        return G[j + t]
    if family is SumFamily.LINEAR_ALT:
        return (-1) ** (j - 1) * G[j + t]
    if family is SumFamily.FIFTH:
        return G[j + t] ** 5
    if family is SumFamily.FIFTH_ALT:
        return (-1) ** (j - 1) * G[j + t] ** 5
    if family is SumFamily.FIVE_PRODUCT:
        return G[j + t - 1] * G[j + t] * G[j + t + 1] * G[j + t + 2] * G[j + t + m]
    if family is SumFamily.FIVE_PRODUCT_ALT:
        return (-1) ** (j - 1) * G[j + t - 1] * G[j + t] * G[j + t + 1] * G[j + t + 2] * G[j + t + m]
    if family is SumFamily.FIVE_PRODUCT_WEIGHTED:
        weight = (-F[m - 3]) ** (n - j) * F[m + 2] ** j
        return weight * G[j + t - 1] * G[j + t] * G[j + t + 1] * G[j + t + 2] * G[j + t + m]
    if family is SumFamily.PENTAD_PROGRESSION:
        return (-F[m - 5]) ** (n - j) * F[m] ** (j - 1) * G[5 * (j + t) + m + s]
    if family is SumFamily.RECIPROCAL:
        num = (-F[m + 2]) ** (n - j) * F[m - 3] ** (j - 1) * G[j + t + m]
        den = _recip_window(params, j + t, range(-2, 4))
        return Fraction(num, den)
    if family is SumFamily.R_PRODUCT:
        weight = (-1) ** (r * (n - j)) * F[m - r] ** (n - j) * F[m] ** (j - 1)
        return weight * window_product(params, j + t, range(1, r)) * G[j + t + m]
    if family is SumFamily.R_RECIPROCAL:
        num = (-1) ** (r * j) * F[m] ** (n - j) * F[m - r] ** (j - 1) * G[j + t + m]
        den = _recip_window(params, j + t, range(0, r + 1))
        return Fraction(num, den)
    raise ValueError(f"unknown family {family!r}")


def direct_sum(
    family: SumFamily,
    params: GibonacciParams,
    n: int,
    t: int = 0,
    m: int = 0,
    r: int = 2,
    s: int = 0,
) -> OracleResult:
    if not isinstance(family, SumFamily):
        raise ValueError(f"unknown family {family!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = 0
    for j in range(1, n + 1):
        try:
            total += summand(family, params, j, n, t=t, m=m, r=r, s=s)
        except ZeroTerm as exc:
            return OracleResult(None, j, exc.index)
    return OracleResult(Fraction(total), n)


def partial_sums(
    family: SumFamily, params: GibonacciParams, n: int, **kw: int
) -> list[Fraction]:
    """``[S(0), S(1), ..., S(n)]``, each computed by its own direct sum."""
    return [direct_sum(family, params, k, **kw).value for k in range(n + 1)]


def reciprocal_series_term(params: GibonacciParams, j: int, t: int, m: int) -> Fraction:
    """``(-1)^(j-1) F[m-3]^(j-1) G[j+t+m] / (F[m+2]^j G[j+t-2] ... G[j+t+3])``."""
    G = cache_for(params)
    F = cache_for(GibonacciParams(0, 1))
    num = (-1) ** (j - 1) * F[m - 3] ** (j - 1) * G[j + t + m]
    den = F[m + 2] ** j * _recip_window(params, j + t, range(-2, 4))
    return Fraction(num, den)
