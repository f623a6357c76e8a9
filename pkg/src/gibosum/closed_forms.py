"""Closed-form right-hand sides for every sum family.

Each function evaluates the collapsed expression directly from boundary
terms; none of them loops over the summation index.  Results are
``Fraction`` even where the value is always an integer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional

from .errors import NotConverged, ZeroTerm
from .families import SumFamily
from .seq import GibonacciParams, SequenceCache, cache_for, fib, lam

__all__ = [
    "sum_linear",
    "sum_linear_alt",
    "sum_fifth",
    "sum_fifth_alt",
    "sum_five_product",
    "sum_five_product_alt",
    "sum_five_product_weighted",
    "five_product_weighted_lambda_form",
    "sum_pentad_progression",
    "sum_reciprocal",
    "sum_r_product",
    "sum_r_reciprocal",
    "LimitResult",
    "limit_reciprocal",
    "reciprocal_remainder",
    "CERTIFY_STEPS",
    "CLOSED_FORMS",
    "closed_form",
]

# consecutive strictly-decreasing remainder magnitudes required before the
# tolerance test counts
CERTIFY_STEPS = 5


def _require_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def _window(G: SequenceCache, lo: int, hi: int) -> int:
    """Product G[lo] ... G[hi]; raises ZeroTerm on the first zero factor."""
    out = 1
    for i in range(lo, hi + 1):
        g = G[i]
        if g == 0:
            raise ZeroTerm(i)
        out *= g
    return out


def _fifth_bracket(G: SequenceCache, n: int, t: int) -> int:
    """44 * sum_{j=1..n} G[j+t]^5, from successive fifth-power differences."""
    return (
        -(G[n + t + 3] ** 5 - G[t + 3] ** 5)
        + 7 * (G[n + t + 2] ** 5 - G[t + 2] ** 5)
        + 47 * (G[n + t + 1] ** 5 - G[t + 1] ** 5)
        + 31 * (G[n + t] ** 5 - G[t] ** 5)
        - 9 * (G[n + t - 1] ** 5 - G[t - 1] ** 5)
        - (G[n + t - 2] ** 5 - G[t - 2] ** 5)
    )


def _fifth_alt_bracket(G: SequenceCache, n: int, t: int) -> int:
    """44 * sum_{j=1..n} (-1)^(j-1) G[j+t]^5, from successive fifth-power sums."""
    s = _sgn(n + 1)
    return (
        -(s * G[n + t + 3] ** 5 + G[t + 3] ** 5)
        + 9 * (s * G[n + t + 2] ** 5 + G[t + 2] ** 5)
        + 31 * (s * G[n + t + 1] ** 5 + G[t + 1] ** 5)
        - 47 * (s * G[n + t] ** 5 + G[t] ** 5)
        + 7 * (s * G[n + t - 1] ** 5 + G[t - 1] ** 5)
        + (s * G[n + t - 2] ** 5 + G[t - 2] ** 5)
    )


def sum_linear(params: GibonacciParams, n: int, t: int) -> Fraction:
    _require_n(n)
    G = cache_for(params)
    return Fraction(G[n + t + 2] - G[t + 2])


def sum_linear_alt(params: GibonacciParams, n: int, t: int) -> Fraction:
    _require_n(n)
    G = cache_for(params)
    return Fraction(_sgn(n + 1) * G[n + t - 1] + G[t - 1])


def sum_fifth(params: GibonacciParams, n: int, t: int) -> Fraction:
    _require_n(n)
    return Fraction(_fifth_bracket(cache_for(params), n, t), 44)


def sum_fifth_alt(params: GibonacciParams, n: int, t: int) -> Fraction:
    _require_n(n)
    return Fraction(_fifth_alt_bracket(cache_for(params), n, t), 44)


def sum_five_product(params: GibonacciParams, n: int, t: int, m: int) -> Fraction:
    """Sum of ``G[j+t-1] G[j+t] G[j+t+1] G[j+t+2] G[j+t+m]`` for j = 1..n."""
    _require_n(n)
    G = cache_for(params)
    lm2 = lam(params) ** 2
    c, d = fib(m + 2), fib(m - 3)
    total = (
        (c + d) * _fifth_bracket(G, n, t)
        - 44 * lm2 * (c + d) * (G[n + t + 2] - G[t + 2])
        - 44 * c * (G[t + 1] ** 5 - lm2 * G[t + 1])
        + 44 * c * (G[n + t + 1] ** 5 - lm2 * G[n + t + 1])
    )
    return Fraction(total, 220)


def sum_five_product_alt(params: GibonacciParams, n: int, t: int, m: int) -> Fraction:
    _require_n(n)
    G = cache_for(params)
    lm2 = lam(params) ** 2
    c, d = fib(m + 2), fib(m - 3)
    total = (
        -(c - d) * _fifth_alt_bracket(G, n, t)
        + 44 * lm2 * (c - d) * (_sgn(n + 1) * G[n + t - 1] + G[t - 1])
        + 44 * c * (G[t + 1] ** 5 - lm2 * G[t + 1])
        + 44 * c * _sgn(n + 1) * (G[n + t + 1] ** 5 - lm2 * G[n + t + 1])
    )
    return Fraction(total, 220)


def five_product_weighted_lambda_form(
    params: GibonacciParams, n: int, t: int, m: int
) -> Fraction:
    """Weighted five-product sum via fifth powers and the characteristic."""
    _require_n(n)
    G = cache_for(params)
    lm2 = lam(params) ** 2
    c, d = fib(m + 2), fib(m - 3)
    head = c ** (n + 1)
    tail = (-d) ** n * c
    total = (
        head * G[n + t + 1] ** 5
        - tail * G[t + 1] ** 5
        - lm2 * (head * G[n + t + 1] - tail * G[t + 1])
    )
    return Fraction(total, 5)


def sum_five_product_weighted(
    params: GibonacciParams, n: int, t: int, m: int
) -> Fraction:
    """Sum of ``(-F[m-3])^(n-j) F[m+2]^j`` times the five-product, j = 1..n.

    Uses the characteristic-free boundary form; see
    :func:`five_product_weighted_lambda_form` for the other one.
    """
    _require_n(n)
    G = cache_for(params)
    c, d = fib(m + 2), fib(m - 3)
    head = prod(G[n + t + i] for i in range(-1, 4))
    tail = prod(G[t + i] for i in range(-1, 4))
    total = c ** (n + 1) * head - _sgn(n) * d**n * c * tail
    return Fraction(total, 5)


def sum_pentad_progression(
    params: GibonacciParams, n: int, t: int, m: int, s: int
) -> Fraction:
    """Sum of ``(-F[m-5])^(n-j) F[m]^(j-1) G[5(j+t)+m+s]`` for j = 1..n."""
    _require_n(n)
    G = cache_for(params)
    total = fib(m) ** n * G[5 * (n + t + 1) + s] - _sgn(n) * fib(m - 5) ** n * G[5 * (t + 1) + s]
    return Fraction(total, 5)


def sum_reciprocal(params: GibonacciParams, n: int, t: int, m: int) -> Fraction:
    """Sum of ``(-F[m+2])^(n-j) F[m-3]^(j-1) G[j+t+m] / (G[j+t-2] ... G[j+t+3])``.

    Raises :class:`ZeroTerm` when any denominator term in the summation
    window (indices ``t-1 .. n+t+3``) vanishes.
    """
    _require_n(n)
    G = cache_for(params)
    if n > 0:
        _window(G, t - 1, n + t + 3)
    head = _window(G, n + t - 1, n + t + 3)
    tail = _window(G, t - 1, t + 3)
    return Fraction(fib(m - 3) ** n, 5 * head) - Fraction((-fib(m + 2)) ** n, 5 * tail)


def sum_r_product(params: GibonacciParams, n: int, t: int, m: int, r: int) -> Fraction:
    """Sum of ``(-1)^(r(n-j)) F[m-r]^(n-j) F[m]^(j-1) G[j+t+1]...G[j+t+r-1] G[j+t+m]``."""
    _require_n(n)
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    G = cache_for(params)
    head = prod(G[n + t + i] for i in range(1, r + 1))
    tail = prod(G[t + i] for i in range(1, r + 1))
    total = fib(m) ** n * head - _sgn(r * n) * fib(m - r) ** n * tail
    return Fraction(total, fib(r))


def sum_r_reciprocal(params: GibonacciParams, n: int, t: int, m: int, r: int) -> Fraction:
    """Sum of ``(-1)^(rj) F[m]^(n-j) F[m-r]^(j-1) G[j+t+m] / (G[j+t]...G[j+t+r])``."""
    _require_n(n)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    G = cache_for(params)
    if n > 0:
        _window(G, t + 1, n + t + r)
    head = _window(G, n + t + 1, n + t + r)
    tail = _window(G, t + 1, t + r)
    total = Fraction(_sgn(r * (n - 1) + 1) * fib(m - r) ** n, head) + Fraction(
        _sgn(r) * fib(m) ** n, tail
    )
    return total / fib(r)


@dataclass
class LimitResult:
    """Outcome of certifying an infinite reciprocal sum.

    ``remainders[k]`` is the exact tail after ``k + 1`` terms, so the partial
    sum after ``n`` terms equals ``limit - remainders[n - 1]``.
    """

    limit: Fraction
    certified: bool
    n_used: int
    remainders: list[Fraction] = field(default_factory=list)
    # set by the verifier once partial sums are re-derived term by term
    partial_sums_exact: Optional[bool] = None


def reciprocal_remainder(params: GibonacciParams, n: int, t: int, m: int) -> Fraction:
    """Exact tail of the normalized reciprocal series after ``n`` terms.

    The normalized series is the reciprocal family divided by
    ``-(-F[m+2])^n``; its partial sums are ``limit - remainder``.
    """
    G = cache_for(params)
    c, d = fib(m + 2), fib(m - 3)
    if c == 0:
        raise ValueError("F[m+2] = 0: the normalized series is undefined for m = -2")
    return Fraction(d, -c) ** n / (5 * _window(G, n + t - 1, n + t + 3))


def limit_reciprocal(
    params: GibonacciParams, t: int, m: int, tol: Fraction, max_n: int
) -> LimitResult:
    """Certify ``sum_{j>=1} (-1)^(j-1) F[m-3]^(j-1) G[j+t+m] / (F[m+2]^j G[j+t-2]...G[j+t+3])``.

    The value is ``1 / (5 G[t-1] ... G[t+3])``.  Certification needs
    :data:`CERTIFY_STEPS` consecutive strictly shrinking remainder magnitudes
    and a remainder magnitude below ``tol``, both within ``max_n`` terms.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    G = cache_for(params)
    limit = Fraction(1, 5 * _window(G, t - 1, t + 3))
    result = LimitResult(limit=limit, certified=False, n_used=0)
    prev = None
    streak = 0
    for n in range(1, max_n + 1):
        rem = reciprocal_remainder(params, n, t, m)
        result.remainders.append(rem)
        result.n_used = n
        mag = abs(rem)
        streak = streak + 1 if prev is not None and mag < prev else 0
        prev = mag
        if streak >= CERTIFY_STEPS and mag < tol:
            result.certified = True
            return result
    raise NotConverged(
        f"remainder not certified below {tol} within {max_n} terms "
        f"(last |remainder| ~ {float(prev):.3e})",
        result,
    )


CLOSED_FORMS = {
    SumFamily.LINEAR: sum_linear,
    SumFamily.LINEAR_ALT: sum_linear_alt,
    SumFamily.FIFTH: sum_fifth,
    SumFamily.FIFTH_ALT: sum_fifth_alt,
    SumFamily.FIVE_PRODUCT: sum_five_product,
    SumFamily.FIVE_PRODUCT_ALT: sum_five_product_alt,
    SumFamily.FIVE_PRODUCT_WEIGHTED: sum_five_product_weighted,
    SumFamily.PENTAD_PROGRESSION: sum_pentad_progression,
    SumFamily.RECIPROCAL: sum_reciprocal,
    SumFamily.R_PRODUCT: sum_r_product,
    SumFamily.R_RECIPROCAL: sum_r_reciprocal,
}


def closed_form(family: SumFamily, params: GibonacciParams, **kw: int) -> Fraction:
    """Dispatch by family, taking exactly the family's integer arguments."""
    return CLOSED_FORMS[family](params, *(kw[a] for a in family.args))
