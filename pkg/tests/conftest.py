from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gibosum.seq import GibonacciParams

POOL = [
    GibonacciParams(0, 1),
    GibonacciParams(2, 1),
    GibonacciParams(1, 1),
    GibonacciParams(3, -4),
    GibonacciParams(-2, 5),
]
WEIGHTS = [Fraction(-3), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


def naive_term(a: int, b: int, j: int) -> int:
    """Walk the recurrence from (G0, G1) with no caching; test-side oracle."""
    x, y = a, b
    if j >= 0:
        for _ in range(j):
            x, y = y, x + y
    else:
        for _ in range(-j):
            x, y = y - x, x
    return x


def naive_fib(j: int) -> int:
    return naive_term(0, 1, j)


def naive_window(a: int, b: int, lo: int, hi: int) -> int:
    out = 1
    for i in range(lo, hi + 1):
        out *= naive_term(a, b, i)
    return out


seeds = st.tuples(st.integers(-50, 50), st.integers(-50, 50)).filter(lambda ab: ab != (0, 0))
params_st = seeds.map(lambda ab: GibonacciParams(*ab))
pool_st = st.sampled_from(POOL)


@pytest.fixture(params=POOL, ids=str)
def params(request):
    return request.param


# acceptance summary lines, filled in by test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE[key]}")
