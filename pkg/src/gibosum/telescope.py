"""Generic telescoping lemmas over any index -> rational sequence.

Left sides are accumulated term by term; right sides are the collapsed
boundary expressions.  Weight powers use Python's ``0 ** 0 == 1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from numbers import Rational
from typing import Callable

from .pointwise import IdentityCheck, check

SequenceOracle = Callable[[int], Rational]

__all__ = [
    "SequenceOracle",
    "telescope",
    "telescope_alt",
    "telescope_weighted",
    "telescope_product",
]


def _require_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def telescope(f: SequenceOracle, n: int) -> IdentityCheck:
    _require_n(n)
    lhs = sum((Fraction(f(j + 1)) - Fraction(f(j)) for j in range(1, n + 1)), Fraction(0))
    return check(lhs, Fraction(f(n + 1)) - Fraction(f(1)))


def telescope_alt(f: SequenceOracle, n: int) -> IdentityCheck:
    _require_n(n)
    lhs = Fraction(0)
    for j in range(1, n + 1):
        lhs += (-1) ** (j - 1) * (Fraction(f(j + 1)) + Fraction(f(j)))
    return check(lhs, (-1) ** (n + 1) * Fraction(f(n + 1)) + Fraction(f(1)))


def telescope_weighted(
    f: SequenceOracle, n: int, c: Rational, d: Rational
) -> IdentityCheck:
    _require_n(n)
    c, d = Fraction(c), Fraction(d)
    lhs = Fraction(0)
    for j in range(1, n + 1):
        lhs += d ** (n - j) * c ** (j - 1) * (c * Fraction(f(j + 1)) - d * Fraction(f(j)))
    return check(lhs, c**n * Fraction(f(n + 1)) - d**n * Fraction(f(1)))


def telescope_product(
    g: SequenceOracle, n: int, r: int, c: Rational, d: Rational
) -> IdentityCheck:
    """Weighted telescoping of the ``r``-term window products ``g(j)...g(j+r-1)``."""
    _require_n(n)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    c, d = Fraction(c), Fraction(d)
    lhs = Fraction(0)
    for j in range(1, n + 1):
        inner = prod((Fraction(g(j + i)) for i in range(1, r)), start=Fraction(1))
        lhs += d ** (n - j) * c ** (j - 1) * inner * (c * Fraction(g(j + r)) - d * Fraction(g(j)))
    head = prod((Fraction(g(n + i)) for i in range(1, r + 1)), start=Fraction(1))
    tail = prod((Fraction(g(i)) for i in range(1, r + 1)), start=Fraction(1))
    return check(lhs, c**n * head - d**n * tail)
