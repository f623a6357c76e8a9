from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gibosum.pointwise import (
    POINTWISE_CHECKS,
    check_arranged_differences,
    check_arranged_sums,
    check_brousseau5,
    check_five_product_core,
    check_gelin_cesaro,
    check_howard,
    check_howard_general,
    check_shift3,
    check_vajda28,
    check_weighted_bridge,
    gelin_cesaro_chain,
    shift3_chain,
)
from gibosum.seq import GibonacciParams

from .conftest import POOL, WEIGHTS, params_st

FIB, LUC, ONES = GibonacciParams(0, 1), GibonacciParams(2, 1), GibonacciParams(1, 1)


def sides(c):
    return (c.lhs, c.rhs, c.equal)


@pytest.mark.parametrize(
    "p, j, lhs",
    [(FIB, 3, 1), (LUC, 2, 25), (ONES, 1, 1)],
)
def test_gelin_cesaro_examples(p, j, lhs):
    assert sides(check_gelin_cesaro(p, j)) == (lhs, lhs, True)


@pytest.mark.parametrize(
    "p, j, value",
    [
        (FIB, 2, 3),
        (FIB, 0, 0),
        # L1*L3 = 4 and L2^2 - (-1)(-5) = 9 - 5
        (LUC, 1, 4),
    ],
)
def test_vajda28_examples(p, j, value):
    assert sides(check_vajda28(p, j)) == (value, value, True)


@pytest.mark.parametrize("p, j, value", [(FIB, 1, 3), (FIB, 2, 5), (LUC, 0, 8)])
def test_shift3_examples(p, j, value):
    assert sides(check_shift3(p, j)) == (value, value, True)


@pytest.mark.parametrize(
    "p, j, c, d, value",
    [(FIB, 2, 1, 1, 30), (FIB, 2, 0, 0, 0), (LUC, 3, 2, 3, 30492)],
)
def test_weighted_bridge_examples(p, j, c, d, value):
    assert sides(check_weighted_bridge(p, j, c, d)) == (value, value, True)


@pytest.mark.parametrize(
    "p, k, r, m, value",
    # k=2, r=5, m=0: F2*F7 + F(-3)*F2 = 13 + 2 = 5*F4
    [(FIB, 0, 2, 0, 1), (FIB, 2, 5, 0, 15), (LUC, 1, 4, 3, 54)],
)
def test_howard_examples(p, k, r, m, value):
    assert sides(check_howard(p, k, r, m)) == (value, value, True)


@pytest.mark.parametrize(
    "p, j, r, m, value",
    [(FIB, 1, 2, 4, 5), (FIB, 0, 1, 1, 1), (LUC, 2, 3, -2, 4)],
)
def test_howard_general_examples(p, j, r, m, value):
    assert sides(check_howard_general(p, j, r, m)) == (value, value, True)


@pytest.mark.parametrize(
    "p, j, m, value",
    [(FIB, 2, 2, 90), (FIB, 1, 0, 0), (LUC, 0, -3, 120)],
)
def test_five_product_core_examples(p, j, m, value):
    assert sides(check_five_product_core(p, j, m)) == (value, value, True)


@pytest.mark.parametrize(
    "p, j, value",
    [(FIB, 3, 32768), (LUC, 1, 16807), (ONES, -2, 1)],
)
def test_brousseau5_examples(p, j, value):
    assert sides(check_brousseau5(p, j)) == (value, value, True)


def test_check_exposes_residual():
    c = check_weighted_bridge(FIB, 4, Fraction(1, 2), Fraction(-3))
    assert c.equal and c.residual == 0 and isinstance(c.lhs, Fraction)


@pytest.mark.parametrize("p", POOL, ids=str)
def test_rearrangements(p):
    for j in range(-10, 11):
        assert check_arranged_differences(p, j)
        assert check_arranged_sums(p, j)


@pytest.mark.parametrize("p", POOL, ids=str)
def test_derivation_chains(p):
    for j in range(-20, 21):
        assert all(shift3_chain(p, j))
        assert all(gelin_cesaro_chain(p, j))


def test_check_table_lists_eight_identities():
    assert len(POINTWISE_CHECKS) == 8


@given(
    params_st,
    st.integers(-40, 40),
    st.integers(-15, 15),
    st.integers(1, 10),
    st.sampled_from(WEIGHTS),
    st.sampled_from(WEIGHTS),
)
def test_all_identities_random(p, j, m, r, c, d):
    assert check_gelin_cesaro(p, j)
    assert check_vajda28(p, j)
    assert check_shift3(p, j)
    assert check_weighted_bridge(p, j, c, d)
    assert check_howard(p, j, r, m)
    assert check_howard_general(p, j, r, m)
    assert check_five_product_core(p, j, m)
    assert check_brousseau5(p, j)


def test_broken_identity_is_reported_not_raised():
    # perturbed version of the Gelin-Cesaro right side
    from gibosum.pointwise import check

    c = check(1, 2)
    assert not c.equal and c.residual == -1
