"""Catalog of displayed Fibonacci/Lucas special cases.

Each entry stores its left side as a literal summand plus an ``n``-dependent
multiplier, and its right side exactly as printed, constants included.  An
entry whose printed form is known to disagree with direct summation is
marked ``suspected-erratum`` and also carries a corrected right side.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .families import SumFamily
from .seq import FIBONACCI, LUCAS, GibonacciParams, fib as F, luc as L

__all__ = ["FixtureEntry", "CATALOG", "get_fixture", "VERIFIED", "ERRATUM"]

VERIFIED = "verified"
ERRATUM = "suspected-erratum"

Summand = Callable[[int, int], Fraction]  # (j, n) -> term
Side = Callable[[int], Fraction]  # n -> value


@dataclass(frozen=True)
class FixtureEntry:
    id: str
    label: str
    family: SumFamily
    params: GibonacciParams
    t: int = 0
    m: int = 0
    r: int = 2
    s: int = 0
    expected_constants: tuple[Fraction, ...] = ()
    status: str = VERIFIED
    summand: Optional[Summand] = None
    scale: Side = field(default=lambda n: Fraction(1))
    rhs: Optional[Side] = None
    corrected_rhs: Optional[Side] = None
    # limit fixtures: the printed value of the infinite sum
    limit: Optional[Fraction] = None

    @property
    def is_limit(self) -> bool:
        return self.limit is not None


def _sg(k: int) -> int:
    return -1 if k % 2 else 1


def _q(*xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


def _prod(seq: Callable[[int], int], lo: int, hi: int) -> int:
    out = 1
    for i in range(lo, hi + 1):
        out *= seq(i)
    return out


# --- five consecutive products -------------------------------------------

def _five(S):
    return lambda j, n: Fraction(_prod(S, j, j + 4))


def _five_alt(S):
    return lambda j, n: Fraction(_sg(j - 1) * _prod(S, j, j + 4))


def _sq_at(S, k):
    """G_j G_{j+1} G_{j+2} G_{j+3} with the factor at offset ``k`` squared."""
    return lambda j, n: Fraction(_prod(S, j, j + 3) * S(j + k))


def _sq_at_alt(S, k):
    return lambda j, n: Fraction(_sg(j - 1) * _prod(S, j, j + 3) * S(j + k))


_FIVE_PRODUCT = [
    FixtureEntry(
        "fib-five-product",
        "44 Σ F_j…F_{j+4} = −F_{n+5}^5 + 7F_{n+4}^5 + 47F_{n+3}^5 + 31F_{n+2}^5 − 9F_{n+1}^5 − F_n^5 − 44F_{n+4} + 30  [t=2,m=-2]",
        SumFamily.FIVE_PRODUCT, FIBONACCI, t=2, m=-2,
        expected_constants=_q(-44, 30),
        summand=_five(F), scale=lambda n: Fraction(44),
        rhs=lambda n: Fraction(
            -F(n + 5) ** 5 + 7 * F(n + 4) ** 5 + 47 * F(n + 3) ** 5 + 31 * F(n + 2) ** 5
            - 9 * F(n + 1) ** 5 - F(n) ** 5 - 44 * F(n + 4) + 30),
    ),
    FixtureEntry(
        "fib-t1-m-1",
        "110 Σ F_j^2 F_{j+1}F_{j+2}F_{j+3} = F_{n+4}^5 − 7F_{n+3}^5 − 25F_{n+2}^5 − 31F_{n+1}^5 + 9F_n^5 + F_{n−1}^5 + 22L_{n+2} − 30  [t=1,m=-1]",
        SumFamily.FIVE_PRODUCT, FIBONACCI, t=1, m=-1,
        expected_constants=_q(22, -30),
        summand=_sq_at(F, 0), scale=lambda n: Fraction(110),
        rhs=lambda n: Fraction(
            F(n + 4) ** 5 - 7 * F(n + 3) ** 5 - 25 * F(n + 2) ** 5 - 31 * F(n + 1) ** 5
            + 9 * F(n) ** 5 + F(n - 1) ** 5 + 22 * L(n + 2) - 30),
    ),
    FixtureEntry(
        "fib-t1-m0",
        "220 Σ F_j F_{j+1}^2 F_{j+2}F_{j+3} = −3F_{n+4}^5 + 21F_{n+3}^5 + 185F_{n+2}^5 + 93F_{n+1}^5 − 27F_n^5 − 3F_{n−1}^5 − 44L_{n+4} + 90  [t=1,m=0]",
        SumFamily.FIVE_PRODUCT, FIBONACCI, t=1, m=0,
        expected_constants=_q(-44, 90),
        summand=_sq_at(F, 1), scale=lambda n: Fraction(220),
        rhs=lambda n: Fraction(
            -3 * F(n + 4) ** 5 + 21 * F(n + 3) ** 5 + 185 * F(n + 2) ** 5 + 93 * F(n + 1) ** 5
            - 27 * F(n) ** 5 - 3 * F(n - 1) ** 5 - 44 * L(n + 4) + 90),
    ),
    FixtureEntry(
        "fib-t1-m1",
        "220 Σ F_j F_{j+1} F_{j+2}^2 F_{j+3} = −F_{n+4}^5 + 7F_{n+3}^5 + 135F_{n+2}^5 + 31F_{n+1}^5 − 9F_n^5 − F_{n−1}^5 − 44L_{n+3} + 30  [t=1,m=1]",
        SumFamily.FIVE_PRODUCT, FIBONACCI, t=1, m=1,
        expected_constants=_q(-44, 30),
        summand=_sq_at(F, 2), scale=lambda n: Fraction(220),
        rhs=lambda n: Fraction(
            -F(n + 4) ** 5 + 7 * F(n + 3) ** 5 + 135 * F(n + 2) ** 5 + 31 * F(n + 1) ** 5
            - 9 * F(n) ** 5 - F(n - 1) ** 5 - 44 * L(n + 3) + 30),
    ),
    FixtureEntry(
        "fib-t1-m2",
        "55 Σ F_j F_{j+1} F_{j+2} F_{j+3}^2 = −F_{n+4}^5 + 7F_{n+3}^5 + 80F_{n+2}^5 + 31F_{n+1}^5 − 9F_n^5 − F_{n−1}^5 − 44F_{n+3} − 33F_{n+2} + 30  [t=1,m=2]",
        SumFamily.FIVE_PRODUCT, FIBONACCI, t=1, m=2,
        expected_constants=_q(-44, -33, 30),
        summand=_sq_at(F, 3), scale=lambda n: Fraction(55),
        rhs=lambda n: Fraction(
            -F(n + 4) ** 5 + 7 * F(n + 3) ** 5 + 80 * F(n + 2) ** 5 + 31 * F(n + 1) ** 5
            - 9 * F(n) ** 5 - F(n - 1) ** 5 - 44 * F(n + 3) - 33 * F(n + 2) + 30),
    ),
    FixtureEntry(
        "fib-five-product-alt",
        "(−1)^{n−1} 44 Σ (−1)^{j−1} F_j…F_{j+4} = −F_{n+5}^5 + 9F_{n+4}^5 + 31F_{n+3}^5 − 47F_{n+2}^5 + 7F_{n+1}^5 + F_n^5 − 44F_{n+1} + (−1)^n 30  [t=2,m=-2]",
        SumFamily.FIVE_PRODUCT_ALT, FIBONACCI, t=2, m=-2,
        expected_constants=_q(-44, 30),
        summand=_five_alt(F), scale=lambda n: Fraction(44 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            -F(n + 5) ** 5 + 9 * F(n + 4) ** 5 + 31 * F(n + 3) ** 5 - 47 * F(n + 2) ** 5
            + 7 * F(n + 1) ** 5 + F(n) ** 5 - 44 * F(n + 1) + _sg(n) * 30),
    ),
    FixtureEntry(
        "fib-alt-t1-m-1",
        "(−1)^{n−1} 55 Σ (−1)^{j−1} F_j^2 F_{j+1}F_{j+2}F_{j+3} = F_{n+4}^5 − 9F_{n+3}^5 − 20F_{n+2}^5 + 47F_{n+1}^5 − 7F_n^5 − F_{n−1}^5 + 11L_{n−1} + (−1)^n 30  [t=1,m=-1]",
        SumFamily.FIVE_PRODUCT_ALT, FIBONACCI, t=1, m=-1,
        expected_constants=_q(11, 30),
        summand=_sq_at_alt(F, 0), scale=lambda n: Fraction(55 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            F(n + 4) ** 5 - 9 * F(n + 3) ** 5 - 20 * F(n + 2) ** 5 + 47 * F(n + 1) ** 5
            - 7 * F(n) ** 5 - F(n - 1) ** 5 + 11 * L(n - 1) + _sg(n) * 30),
    ),
    FixtureEntry(
        "fib-alt-t1-m0",
        "(−1)^{n−1} 220 Σ (−1)^{j−1} F_j F_{j+1}^2 F_{j+2}F_{j+3} = −F_{n+4}^5 + 9F_{n+3}^5 + 75F_{n+2}^5 − 47F_{n+1}^5 + 7F_n^5 + F_{n−1}^5 − 44L_{n+1} − (−1)^n 30  [t=1,m=0]",
        SumFamily.FIVE_PRODUCT_ALT, FIBONACCI, t=1, m=0,
        expected_constants=_q(-44, -30),
        summand=_sq_at_alt(F, 1), scale=lambda n: Fraction(220 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            -F(n + 4) ** 5 + 9 * F(n + 3) ** 5 + 75 * F(n + 2) ** 5 - 47 * F(n + 1) ** 5
            + 7 * F(n) ** 5 + F(n - 1) ** 5 - 44 * L(n + 1) - _sg(n) * 30),
    ),
    FixtureEntry(
        "fib-alt-t1-m1",
        "(−1)^{n−1} 220 Σ (−1)^{j−1} F_j F_{j+1} F_{j+2}^2 F_{j+3} = 3F_{n+4}^5 − 27F_{n+3}^5 − 5F_{n+2}^5 + 141F_{n+1}^5 − 21F_n^5 − 3F_{n−1}^5 − 44L_n + (−1)^n 90  [t=1,m=1]",
        SumFamily.FIVE_PRODUCT_ALT, FIBONACCI, t=1, m=1,
        expected_constants=_q(-44, 90),
        summand=_sq_at_alt(F, 2), scale=lambda n: Fraction(220 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            3 * F(n + 4) ** 5 - 27 * F(n + 3) ** 5 - 5 * F(n + 2) ** 5 + 141 * F(n + 1) ** 5
            - 21 * F(n) ** 5 - 3 * F(n - 1) ** 5 - 44 * L(n) + _sg(n) * 90),
    ),
    FixtureEntry(
        "fib-alt-t1-m2",
        "(−1)^{n−1} 110 Σ (−1)^{j−1} F_j F_{j+1} F_{j+2} F_{j+3}^2 = F_{n+4}^5 − 9F_{n+3}^5 + 35F_{n+2}^5 + 47F_{n+1}^5 − 7F_n^5 − F_{n−1}^5 − 22L_{n+2} + (−1)^n 30  [t=1,m=2]",
        SumFamily.FIVE_PRODUCT_ALT, FIBONACCI, t=1, m=2,
        expected_constants=_q(-22, 30),
        summand=_sq_at_alt(F, 3), scale=lambda n: Fraction(110 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            F(n + 4) ** 5 - 9 * F(n + 3) ** 5 + 35 * F(n + 2) ** 5 + 47 * F(n + 1) ** 5
            - 7 * F(n) ** 5 - F(n - 1) ** 5 - 22 * L(n + 2) + _sg(n) * 30),
    ),
    FixtureEntry(
        "lucas-five-product",
        "44 Σ L_j…L_{j+4} = −L_{n+5}^5 + 7L_{n+4}^5 + 47L_{n+3}^5 + 31L_{n+2}^5 − 9L_{n+1}^5 − L_n^5 − 1100L_{n+4} − 4518  [t=2,m=-2]",
        SumFamily.FIVE_PRODUCT, LUCAS, t=2, m=-2,
        expected_constants=_q(-1100, -4518),
        summand=_five(L), scale=lambda n: Fraction(44),
        rhs=lambda n: Fraction(
            -L(n + 5) ** 5 + 7 * L(n + 4) ** 5 + 47 * L(n + 3) ** 5 + 31 * L(n + 2) ** 5
            - 9 * L(n + 1) ** 5 - L(n) ** 5 - 1100 * L(n + 4) - 4518),
    ),
    FixtureEntry(
        "lucas-t1-m-1",
        "110 Σ L_j^2 L_{j+1}L_{j+2}L_{j+3} = L_{n+4}^5 − 7L_{n+3}^5 − 25L_{n+2}^5 − 31L_{n+1}^5 + 9L_n^5 + L_{n−1}^5 + 2750F_{n+2} − 6570  [t=1,m=-1]",
        SumFamily.FIVE_PRODUCT, LUCAS, t=1, m=-1,
        expected_constants=_q(2750, -6570),
        summand=_sq_at(L, 0), scale=lambda n: Fraction(110),
        rhs=lambda n: Fraction(
            L(n + 4) ** 5 - 7 * L(n + 3) ** 5 - 25 * L(n + 2) ** 5 - 31 * L(n + 1) ** 5
            + 9 * L(n) ** 5 + L(n - 1) ** 5 + 2750 * F(n + 2) - 6570),
    ),
    FixtureEntry(
        "lucas-five-product-alt",
        "(−1)^{n−1} 44 Σ (−1)^{j−1} L_j…L_{j+4} = −L_{n+5}^5 + 9L_{n+4}^5 + 31L_{n+3}^5 − 47L_{n+2}^5 + 7L_{n+1}^5 + L_n^5 − 1100L_{n+1} − (−1)^n 9474  [t=2,m=-2]",
        SumFamily.FIVE_PRODUCT_ALT, LUCAS, t=2, m=-2,
        expected_constants=_q(-1100, -9474),
        summand=_five_alt(L), scale=lambda n: Fraction(44 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            -L(n + 5) ** 5 + 9 * L(n + 4) ** 5 + 31 * L(n + 3) ** 5 - 47 * L(n + 2) ** 5
            + 7 * L(n + 1) ** 5 + L(n) ** 5 - 1100 * L(n + 1) - _sg(n) * 9474),
    ),
    FixtureEntry(
        "lucas-alt-t1-m-1",
        "(−1)^{n−1} 55 Σ (−1)^{j−1} L_j^2 L_{j+1}L_{j+2}L_{j+3} = L_{n+4}^5 − 9L_{n+3}^5 − 20L_{n+2}^5 + 47L_{n+1}^5 − 7L_n^5 − L_{n−1}^5 + 1375F_{n−1} − (−1)^n 3930  [t=1,m=-1]",
        SumFamily.FIVE_PRODUCT_ALT, LUCAS, t=1, m=-1,
        expected_constants=_q(1375, -3930),
        summand=_sq_at_alt(L, 0), scale=lambda n: Fraction(55 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            L(n + 4) ** 5 - 9 * L(n + 3) ** 5 - 20 * L(n + 2) ** 5 + 47 * L(n + 1) ** 5
            - 7 * L(n) ** 5 - L(n - 1) ** 5 + 1375 * F(n - 1) - _sg(n) * 3930),
    ),
]


# --- fifth powers ---------------------------------------------------------

_FIFTH = [
    FixtureEntry(
        "fib-fifth",
        "44 Σ F_j^5 = −F_{n+3}^5 + 7F_{n+2}^5 + 47F_{n+1}^5 + 31F_n^5 − 9F_{n−1}^5 − F_{n−2}^5 − 14",
        SumFamily.FIFTH, FIBONACCI,
        expected_constants=_q(-14),
        summand=lambda j, n: Fraction(F(j) ** 5), scale=lambda n: Fraction(44),
        rhs=lambda n: Fraction(
            -F(n + 3) ** 5 + 7 * F(n + 2) ** 5 + 47 * F(n + 1) ** 5 + 31 * F(n) ** 5
            - 9 * F(n - 1) ** 5 - F(n - 2) ** 5 - 14),
    ),
    FixtureEntry(
        "lucas-fifth",
        "44 Σ L_j^5 = −L_{n+3}^5 + 7L_{n+2}^5 + 47L_{n+1}^5 + 31L_n^5 − 9L_{n−1}^5 − L_{n−2}^5 − 1482",
        SumFamily.FIFTH, LUCAS,
        expected_constants=_q(-1482),
        summand=lambda j, n: Fraction(L(j) ** 5), scale=lambda n: Fraction(44),
        rhs=lambda n: Fraction(
            -L(n + 3) ** 5 + 7 * L(n + 2) ** 5 + 47 * L(n + 1) ** 5 + 31 * L(n) ** 5
            - 9 * L(n - 1) ** 5 - L(n - 2) ** 5 - 1482),
    ),
    FixtureEntry(
        "fib-fifth-alt",
        "(−1)^{n−1} 44 Σ (−1)^{j−1} F_j^5 = −F_{n+3}^5 + 9F_{n+2}^5 + 31F_{n+1}^5 − 47F_n^5 + 7F_{n−1}^5 + F_{n−2}^5 + (−1)^{n+1} 14",
        SumFamily.FIFTH_ALT, FIBONACCI,
        expected_constants=_q(14),
        summand=lambda j, n: Fraction(_sg(j - 1) * F(j) ** 5),
        scale=lambda n: Fraction(44 * _sg(n - 1)),
        rhs=lambda n: Fraction(
            -F(n + 3) ** 5 + 9 * F(n + 2) ** 5 + 31 * F(n + 1) ** 5 - 47 * F(n) ** 5
            + 7 * F(n - 1) ** 5 + F(n - 2) ** 5 + _sg(n + 1) * 14),
    ),
    FixtureEntry(
        "lucas-fifth-alt",
        "(−1)^{n−1} 44 Σ (−1)^{j−1} L_j^5 = −L_{n+3}^5 + 9L_{n+2}^5 + 31F_{n+1}^5 − 47L_n^5 + 7L_{n−1}^5 + L_{n−2}^5 + (−1)^n 74",
        SumFamily.FIFTH_ALT, LUCAS,
        expected_constants=_q(74),
        status=ERRATUM,
        summand=lambda j, n: Fraction(_sg(j - 1) * L(j) ** 5),
        scale=lambda n: Fraction(44 * _sg(n - 1)),
        # as printed: one stray Fibonacci term
        rhs=lambda n: Fraction(
            -L(n + 3) ** 5 + 9 * L(n + 2) ** 5 + 31 * F(n + 1) ** 5 - 47 * L(n) ** 5
            + 7 * L(n - 1) ** 5 + L(n - 2) ** 5 + _sg(n) * 74),
        corrected_rhs=lambda n: Fraction(
            -L(n + 3) ** 5 + 9 * L(n + 2) ** 5 + 31 * L(n + 1) ** 5 - 47 * L(n) ** 5
            + 7 * L(n - 1) ** 5 + L(n - 2) ** 5 + _sg(n) * 74),
    ),
]


# --- weighted five-products and fifth-index progressions -------------------

def _weighted_2j(S):
    return lambda j, n: Fraction(2**j * _prod(S, j, j + 3) * S(j + 2))


def _weighted_3j_alt(S):
    return lambda j, n: Fraction(_sg(j - 1) * 3**j * _prod(S, j, j + 3) * S(j + 3))


_WEIGHTED = [
    FixtureEntry(
        "fib-weighted-2j",
        "5 Σ 2^j F_j F_{j+1} F_{j+2}^2 F_{j+3} = 2^{n+1} F_n F_{n+1} F_{n+2} F_{n+3} F_{n+4}  [t=1,m=1]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, FIBONACCI, t=1, m=1,
        summand=_weighted_2j(F), scale=lambda n: Fraction(5),
        rhs=lambda n: Fraction(2 ** (n + 1) * _prod(F, n, n + 4)),
    ),
    FixtureEntry(
        "fib-weighted-3j-alt",
        "5 Σ (−1)^{j−1} 3^j F_j F_{j+1} F_{j+2} F_{j+3}^2 = (−1)^{n+1} 3^{n+1} F_n F_{n+1} F_{n+2} F_{n+3} F_{n+4}  [t=1,m=2]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, FIBONACCI, t=1, m=2,
        summand=_weighted_3j_alt(F), scale=lambda n: Fraction(5),
        rhs=lambda n: Fraction(_sg(n + 1) * 3 ** (n + 1) * _prod(F, n, n + 4)),
    ),
    FixtureEntry(
        "lucas-weighted-2j",
        "5 Σ 2^j L_j L_{j+1} L_{j+2}^2 L_{j+3} = 2^{n+1} L_n L_{n+1} L_{n+2} L_{n+3} L_{n+4} − 336  [t=1,m=1]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, LUCAS, t=1, m=1,
        expected_constants=_q(-336),
        summand=_weighted_2j(L), scale=lambda n: Fraction(5),
        rhs=lambda n: Fraction(2 ** (n + 1) * _prod(L, n, n + 4) - 336),
    ),
    FixtureEntry(
        "lucas-weighted-3j-alt",
        "5 Σ (−1)^{j−1} 3^j L_j L_{j+1} L_{j+2} L_{j+3}^2 = (−1)^{n+1} 3^{n+1} L_n L_{n+1} L_{n+2} L_{n+3} L_{n+4} + 504  [t=1,m=2]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, LUCAS, t=1, m=2,
        expected_constants=_q(504),
        summand=_weighted_3j_alt(L), scale=lambda n: Fraction(5),
        rhs=lambda n: Fraction(_sg(n + 1) * 3 ** (n + 1) * _prod(L, n, n + 4) + 504),
    ),
    FixtureEntry(
        "fib-progression",
        "Σ 3^{n−j} F_{5j+1} = F_{5n+5}/5 − 3^n  [t=0,m=1,s=0]",
        SumFamily.PENTAD_PROGRESSION, FIBONACCI, t=0, m=1, s=0,
        expected_constants=_q(Fraction(1, 5), -1),
        summand=lambda j, n: Fraction(3 ** (n - j) * F(5 * j + 1)),
        rhs=lambda n: Fraction(F(5 * n + 5), 5) - 3**n,
    ),
    FixtureEntry(
        "lucas-progression",
        "Σ 3^{n−j} L_{5j+1} = L_{5n+5}/5 − 11·3^n/5  [t=0,m=1,s=0]",
        SumFamily.PENTAD_PROGRESSION, LUCAS, t=0, m=1, s=0,
        expected_constants=_q(Fraction(1, 5), Fraction(-11, 5)),
        summand=lambda j, n: Fraction(3 ** (n - j) * L(5 * j + 1)),
        rhs=lambda n: Fraction(L(5 * n + 5), 5) - Fraction(11 * 3**n, 5),
    ),
]


# --- reciprocal sums and their limits ---------------------------------------

def _recip_3j(S):
    return lambda j, n: Fraction(3 ** (j - 1), S(j) * _prod(S, j + 2, j + 5))


def _recip_8j_alt(S):
    return lambda j, n: Fraction(_sg(j - 1) * S(j + 6), 2 ** (3 * j) * _prod(S, j, j + 5))


_RECIPROCAL = [
    FixtureEntry(
        "fib-reciprocal-3j",
        "Σ 3^{j−1}/(F_j F_{j+2} F_{j+3} F_{j+4} F_{j+5}) = −(1/5)·3^n/(F_{n+1}…F_{n+5}) + 1/150  [t=2,m=-1]",
        SumFamily.RECIPROCAL, FIBONACCI, t=2, m=-1,
        expected_constants=_q(Fraction(-1, 5), Fraction(1, 150)),
        summand=_recip_3j(F),
        rhs=lambda n: Fraction(-(3**n), 5 * _prod(F, n + 1, n + 5)) + Fraction(1, 150),
    ),
    FixtureEntry(
        "lucas-reciprocal-3j",
        "Σ 3^{j−1}/(L_j L_{j+2} L_{j+3} L_{j+4} L_{j+5}) = −(1/5)·3^n/(L_{n+1}…L_{n+5}) + 1/4620  [t=2,m=-1]",
        SumFamily.RECIPROCAL, LUCAS, t=2, m=-1,
        expected_constants=_q(Fraction(-1, 5), Fraction(1, 4620)),
        summand=_recip_3j(L),
        rhs=lambda n: Fraction(-(3**n), 5 * _prod(L, n + 1, n + 5)) + Fraction(1, 4620),
    ),
    FixtureEntry(
        "fib-reciprocal-8j-alt",
        "Σ (−1)^{j−1} F_{j+6}/(2^{3j} F_j…F_{j+5}) = (1/5)(−1)^{n+1}/(2^{3n} F_{n+1}…F_{n+5}) + 1/150  [t=2,m=4]",
        SumFamily.RECIPROCAL, FIBONACCI, t=2, m=4,
        expected_constants=_q(Fraction(1, 5), Fraction(1, 150)),
        summand=_recip_8j_alt(F),
        rhs=lambda n: Fraction(_sg(n + 1), 5 * 2 ** (3 * n) * _prod(F, n + 1, n + 5))
        + Fraction(1, 150),
    ),
    FixtureEntry(
        "lucas-reciprocal-8j-alt",
        "Σ (−1)^{j−1} L_{j+6}/(2^{3j} L_j…L_{j+5}) = (1/5)(−1)^{n+1}/(2^{3n} L_{n+1}…L_{n+5}) + 1/4620  [t=2,m=4]",
        SumFamily.RECIPROCAL, LUCAS, t=2, m=4,
        expected_constants=_q(Fraction(1, 5), Fraction(1, 4620)),
        summand=_recip_8j_alt(L),
        rhs=lambda n: Fraction(_sg(n + 1), 5 * 2 ** (3 * n) * _prod(L, n + 1, n + 5))
        + Fraction(1, 4620),
    ),
]

_LIMITS = [
    FixtureEntry(
        f"{name}-limit-{w}",
        f"Σ_{{j≥1}} {desc} = {val}  [t=2,m={m}]",
        SumFamily.RECIPROCAL, params, t=2, m=m,
        expected_constants=_q(Fraction(val)),
        summand=mk(S),
        limit=Fraction(val),
    )
    for name, params, S, val in (("fib", FIBONACCI, F, "1/150"), ("lucas", LUCAS, L, "1/4620"))
    for w, m, mk, desc in (
        ("3j", -1, _recip_3j, "3^{j−1}/(G_j G_{j+2} G_{j+3} G_{j+4} G_{j+5})"),
        ("8j-alt", 4, _recip_8j_alt, "(−1)^{j−1} G_{j+6}/(2^{3j} G_j…G_{j+5})"),
    )
]


def _intro(entry: FixtureEntry) -> FixtureEntry:
    """Introductory restatement of a later display, kept as its own entry."""
    return replace(entry, id="intro-" + entry.id)


_INTRO_IDS = (
    "fib-five-product",
    "fib-five-product-alt",
    "lucas-five-product",
    "lucas-five-product-alt",
    "fib-reciprocal-3j",
    "fib-reciprocal-8j-alt",
    "fib-limit-3j",
    "fib-limit-8j-alt",
    "fib-progression",
)

_BODY = _FIVE_PRODUCT + _FIFTH + _WEIGHTED + _RECIPROCAL + _LIMITS
_by_id = {e.id: e for e in _BODY}

_INTRO = [_intro(_by_id[i]) for i in _INTRO_IDS] + [
    FixtureEntry(
        "intro-fib-weighted-2j",
        "Σ 2^j F_j F_{j+1} F_{j+2}^2 F_{j+3} = (2^{n+1}/5) F_n F_{n+1} F_{n+2} F_{n+3} F_{n+4}  [t=1,m=1]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, FIBONACCI, t=1, m=1,
        expected_constants=_q(Fraction(1, 5)),
        summand=_weighted_2j(F),
        rhs=lambda n: Fraction(2 ** (n + 1) * _prod(F, n, n + 4), 5),
    ),
    FixtureEntry(
        "intro-fib-weighted-3j-alt",
        "Σ (−1)^{j−1} 3^j F_j F_{j+1} F_{j+2} F_{j+3}^2 = ((−1)^{n+1} 3^{n+1}/5) F_n F_{n+1} F_{n+2} F_{n+3} F_{n+4}  [t=1,m=2]",
        SumFamily.FIVE_PRODUCT_WEIGHTED, FIBONACCI, t=1, m=2,
        expected_constants=_q(Fraction(1, 5)),
        summand=_weighted_3j_alt(F),
        rhs=lambda n: Fraction(_sg(n + 1) * 3 ** (n + 1) * _prod(F, n, n + 4), 5),
    ),
]

CATALOG: dict[str, FixtureEntry] = {e.id: e for e in _INTRO + _BODY}
assert len(CATALOG) == len(_INTRO) + len(_BODY), "duplicate fixture id"


def get_fixture(fixture_id: str) -> FixtureEntry:
    try:
        return CATALOG[fixture_id]
    except KeyError:
        raise KeyError(f"unknown fixture {fixture_id!r}") from None
