import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gibosum.seq import (
    FIBONACCI,
    LUCAS,
    GibonacciParams,
    SequenceCache,
    lam,
    term,
    term_block,
)

from .conftest import POOL, naive_term, params_st

J = range(-30, 31)


@pytest.mark.parametrize(
    "ab, j, expected",
    [
        ((0, 1), 10, 55),
        ((2, 1), 0, 2),
        ((0, 1), -4, -3),
        ((3, -4), 2, -1),
    ],
)
def test_term_examples(ab, j, expected):
    assert term(GibonacciParams(*ab), j) == expected


@pytest.mark.parametrize("ab, expected", [((0, 1), 1), ((2, 1), -5), ((1, 1), -1)])
def test_lambda_examples(ab, expected):
    assert lam(GibonacciParams(*ab)) == expected


@pytest.mark.parametrize(
    "ab, lo, hi, expected",
    [
        ((0, 1), -2, 3, [-1, 1, 0, 1, 1, 2]),
        ((2, 1), 0, 5, [2, 1, 3, 4, 7, 11]),
        ((0, 1), 4, 4, [3]),
    ],
)
def test_term_block_examples(ab, lo, hi, expected):
    assert term_block(GibonacciParams(*ab), lo, hi) == expected


def test_term_block_rejects_reversed_range():
    with pytest.raises(ValueError):
        term_block(FIBONACCI, 3, 2)


def test_zero_seeds_rejected():
    with pytest.raises(ValueError):
        GibonacciParams(0, 0)


def test_specializations():
    assert [term(FIBONACCI, j) for j in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [term(LUCAS, j) for j in range(10)] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]


@pytest.mark.parametrize("p", POOL, ids=str)
def test_recurrence_both_directions(p):
    for j in J:
        assert term(p, j + 2) == term(p, j + 1) + term(p, j)


@pytest.mark.parametrize("p", POOL, ids=str)
def test_lambda_parity(p):
    for j in J:
        assert term(p, j + 1) ** 2 - term(p, j) * term(p, j + 2) == (-1) ** (j % 2) * lam(p)


@given(params_st, st.integers(-60, 60))
def test_lambda_parity_property(p, j):
    assert term(p, j + 1) ** 2 - term(p, j) * term(p, j + 2) == (-1) ** (j % 2) * lam(p)


@given(params_st, st.integers(-60, 60))
def test_linearity_in_seeds(p, j):
    unit_a = GibonacciParams(1, 0)
    assert term(p, j) == p.a * term(unit_a, j) + p.b * term(FIBONACCI, j)


@given(params_st, st.integers(-80, 80))
def test_matches_naive_walk(p, j):
    assert term(p, j) == naive_term(p.a, p.b, j)


@given(params_st, st.integers(-40, 40), st.integers(0, 40))
def test_block_is_cache_transparent(p, lo, width):
    block = term_block(p, lo, lo + width)
    assert block == [naive_term(p.a, p.b, j) for j in range(lo, lo + width + 1)]


def test_big_indices_are_exact():
    # F_100 overflows 64 bits several times over
    assert term(FIBONACCI, 100) == 354224848179261915075
    assert term(FIBONACCI, -100) == -354224848179261915075


def test_cache_concurrent_readers():
    cache = SequenceCache(GibonacciParams(7, -3))
    results = {}

    def read(k):
        results[k] = [cache[j] for j in range(-200 * k, 200 * k, 7)]

    threads = [threading.Thread(target=read, args=(k,)) for k in range(1, 9)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for k, vals in results.items():
        assert vals == [naive_term(7, -3, j) for j in range(-200 * k, 200 * k, 7)]
    assert cache.lo <= -1400 and cache.hi >= 1393
