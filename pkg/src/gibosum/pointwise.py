"""Single-index identities: both sides evaluated exactly.

Every check returns an :class:`IdentityCheck` carrying the two sides so a
failing case can be reported with its values.  Fibonacci coefficients with
negative subscripts are read from the Fibonacci sequence itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .seq import GibonacciParams, cache_for, fib, lam

__all__ = [
    "IdentityCheck",
    "check",
    "check_gelin_cesaro",
    "check_vajda28",
    "check_shift3",
    "check_weighted_bridge",
    "check_howard",
    "check_howard_general",
    "check_five_product_core",
    "check_brousseau5",
    "check_arranged_differences",
    "check_arranged_sums",
    "shift3_chain",
    "gelin_cesaro_chain",
    "POINTWISE_CHECKS",
]

# 44*G[j]^5 as combinations of consecutive fifth-power differences / sums,
# listed for the pairs (j+3, j+2), (j+2, j+1), ..., (j-2, j-3).
DIFF_COEFFS = (-1, 7, 47, 31, -9, -1)
SUM_COEFFS = (-1, 9, 31, -47, 7, 1)


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction
    equal: bool

    def __bool__(self) -> bool:
        return self.equal

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs


def check(lhs: Rational, rhs: Rational) -> IdentityCheck:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return IdentityCheck(lhs, rhs, lhs == rhs)


def _sgn(j: int) -> int:
    """(-1)**j for any integer j."""
    return -1 if j % 2 else 1


def check_gelin_cesaro(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    lhs = G[j] ** 4 - G[j - 2] * G[j - 1] * G[j + 1] * G[j + 2]
    return check(lhs, lam(params) ** 2)


def check_vajda28(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    return check(G[j] * G[j + 2], G[j + 1] ** 2 - _sgn(j) * lam(params))


def check_shift3(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    return check(G[j] * G[j + 3], G[j + 1] * G[j + 2] - _sgn(j) * lam(params))


def check_weighted_bridge(
    params: GibonacciParams, j: int, c: Rational, d: Rational
) -> IdentityCheck:
    G = cache_for(params)
    c, d = Fraction(c), Fraction(d)
    lhs = G[j - 1] * G[j] * G[j + 1] * G[j + 2] * (c * G[j + 3] - d * G[j - 2])
    rhs = (
        c * G[j + 1] ** 5
        - d * G[j] ** 5
        - lam(params) ** 2 * (c * G[j + 1] - d * G[j])
    )
    return check(lhs, rhs)


def check_howard(params: GibonacciParams, k: int, r: int, m: int) -> IdentityCheck:
    G = cache_for(params)
    lhs = fib(m + 2) * G[k + r] + _sgn(r - 1) * fib(m - r + 2) * G[k]
    return check(lhs, fib(r) * G[k + m + 2])


def check_howard_general(
    params: GibonacciParams, j: int, r: int, m: int
) -> IdentityCheck:
    G = cache_for(params)
    lhs = fib(m) * G[j + r] - _sgn(r) * fib(m - r) * G[j]
    return check(lhs, fib(r) * G[j + m])


def check_five_product_core(params: GibonacciParams, j: int, m: int) -> IdentityCheck:
    G = cache_for(params)
    c, d = fib(m + 2), fib(m - 3)
    lhs = 5 * G[j - 1] * G[j] * G[j + 1] * G[j + 2] * G[j + m]
    rhs = (
        c * G[j + 1] ** 5
        + d * G[j] ** 5
        - lam(params) ** 2 * (c * G[j + 1] + d * G[j])
    )
    return check(lhs, rhs)


def check_brousseau5(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    p = {i: G[j + i] ** 5 for i in range(-3, 4)}
    rhs = 8 * p[2] + 40 * p[1] - 60 * p[0] - 40 * p[-1] + 8 * p[-2] + p[-3]
    return check(p[3], rhs)


def check_arranged_differences(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    p = [G[j + i] ** 5 for i in range(3, -4, -1)]  # p[0] = G[j+3]^5
    rhs = sum(c * (p[i] - p[i + 1]) for i, c in enumerate(DIFF_COEFFS))
    return check(44 * G[j] ** 5, rhs)


def check_arranged_sums(params: GibonacciParams, j: int) -> IdentityCheck:
    G = cache_for(params)
    p = [G[j + i] ** 5 for i in range(3, -4, -1)]
    rhs = sum(c * (p[i] + p[i + 1]) for i, c in enumerate(SUM_COEFFS))
    return check(44 * G[j] ** 5, rhs)


def shift3_chain(params: GibonacciParams, j: int) -> list[IdentityCheck]:
    """Each step of rewriting ``G[j+1]G[j+2]`` into ``G[j]G[j+3] + (-1)^j lam``."""
    G = cache_for(params)
    s, lm = _sgn(j), lam(params)
    lines = [
        G[j + 1] * G[j + 2],
        (G[j + 2] - G[j]) * G[j + 2],
        G[j + 2] ** 2 - G[j] * G[j + 2],
        G[j + 2] ** 2 - G[j + 1] ** 2 + s * lm,
        G[j] * G[j + 3] + s * lm,
    ]
    return [check(x, y) for x, y in zip(lines, lines[1:])]


def gelin_cesaro_chain(params: GibonacciParams, j: int) -> list[IdentityCheck]:
    """Each step of the product expansion ending in ``G[j]^4 - lam^2``."""
    G = cache_for(params)
    s, lm = _sgn(j), lam(params)
    gj2 = G[j] ** 2
    lines = [
        G[j - 2] * G[j - 1] * G[j + 1] * G[j + 2],
        (G[j - 1] * G[j + 2]) * (G[j - 2] * G[j + 1]),
        (G[j] * G[j + 1] + s * lm) * (G[j - 1] * G[j] - s * lm),
        G[j - 1] * gj2 * G[j + 1] - s * gj2 * lm - lm**2,
        gj2 * (G[j - 1] * G[j + 1] - s * lm) - lm**2,
        G[j] ** 4 - lm**2,
    ]
    return [check(x, y) for x, y in zip(lines, lines[1:])]


# name -> (callable, argument names beyond params)
POINTWISE_CHECKS = {
    "gelin_cesaro": (check_gelin_cesaro, ("j",)),
    "vajda28": (check_vajda28, ("j",)),
    "shift3": (check_shift3, ("j",)),
    "weighted_bridge": (check_weighted_bridge, ("j", "c", "d")),
    "howard": (check_howard, ("k", "r", "m")),
    "howard_general": (check_howard_general, ("j", "r", "m")),
    "five_product_core": (check_five_product_core, ("j", "m")),
    "brousseau5": (check_brousseau5, ("j",)),
}
