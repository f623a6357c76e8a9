"""Acceptance criteria, one test per criterion.

Each test records a one-line verdict in ``conftest.ACCEPTANCE`` before it
asserts, so the terminal summary lists every criterion even when one fails.
"""
import io
import itertools
import time
from fractions import Fraction

from gibosum import closed_forms as cf
from gibosum import pointwise as pw
from gibosum.cli import main
from gibosum.errors import ZeroTerm
from gibosum.families import SumFamily
from gibosum.fixtures import ERRATUM, get_fixture
from gibosum.oracle import direct_sum
from gibosum.seq import GibonacciParams, fib, lam, term
from gibosum.telescope import telescope_product
from gibosum.verifier import check_limit, default_grid, verify_all, verify_fixture

from .conftest import ACCEPTANCE, POOL, WEIGHTS

FIB, LUC = GibonacciParams(0, 1), GibonacciParams(2, 1)


def record(key, ok, detail):
    ACCEPTANCE[key] = f"{'PASS' if ok else 'FAIL'}  {detail}"


def test_criterion_1_pointwise_suite():
    J = range(-20, 21)
    M = range(-10, 11)
    R = range(1, 9)
    start = time.perf_counter()
    failures, total = [], 0

    def run(name, fn, params, *args):
        nonlocal total
        total += 1
        if not fn(params, *args).equal:
            failures.append((name, str(params), args))

    for p in POOL:
        for j in J:
            run("gelin_cesaro", pw.check_gelin_cesaro, p, j)
            run("vajda28", pw.check_vajda28, p, j)
            run("shift3", pw.check_shift3, p, j)
            run("brousseau5", pw.check_brousseau5, p, j)
            run("arranged_differences", pw.check_arranged_differences, p, j)
            run("arranged_sums", pw.check_arranged_sums, p, j)
            for c, d in itertools.product(WEIGHTS, WEIGHTS):
                run("weighted_bridge", pw.check_weighted_bridge, p, j, c, d)
            for m in M:
                run("five_product_core", pw.check_five_product_core, p, j, m)
                for r in R:
                    run("howard", pw.check_howard, p, j, r, m)
                    run("howard_general", pw.check_howard_general, p, j, r, m)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    record("1 pointwise", ok, f"{total} checks, {len(failures)} failures, {elapsed:.2f}s (limit 10s)")
    assert not failures, failures[:5]
    assert elapsed < 10


def test_criterion_2_oracle_equivalence_default_grid():
    start = time.perf_counter()
    reports = verify_all(default_grid())
    elapsed = time.perf_counter() - start
    checked = sum(r.cells_checked for r in reports)
    skipped = sum(r.cells_skipped_zero for r in reports)
    failed = sum(len(r.failures) for r in reports)
    ok = failed == 0 and elapsed < 300
    record(
        "2 oracle",
        ok,
        f"{len(reports)} families, {checked} cells checked, {skipped} zero-skipped, "
        f"{failed} failures, {elapsed:.1f}s (limit 300s)",
    )
    assert failed == 0, [r.failures[:3] for r in reports if r.failures]
    assert elapsed < 300


# id -> constants its right side must carry
CONSTANT_FIXTURES = {
    "fib-fifth": (-14,),
    "lucas-fifth": (-1482,),
    "fib-five-product": (-44, 30),
    "lucas-five-product": (-1100, -4518),
    "fib-five-product-alt": (30,),
    "lucas-five-product-alt": (-9474,),
    "lucas-weighted-2j": (-336,),
    "lucas-weighted-3j-alt": (504,),
    "fib-progression": (Fraction(1, 5), -1),
    "lucas-progression": (Fraction(1, 5), Fraction(-11, 5)),
}


def test_criterion_3_fixture_constants():
    bad = []
    for fid, consts in CONSTANT_FIXTURES.items():
        entry = get_fixture(fid)
        rep = verify_fixture(fid, range(16))
        if not (rep.printed_ok and set(consts) <= set(entry.expected_constants)):
            bad.append((fid, rep.failing_cells))
    # independent spot values of the closed forms behind two of the constants
    for n in range(16):
        if cf.sum_pentad_progression(FIB, n, 0, 1, 0) != Fraction(fib(5 * n + 5), 5) - 3**n:
            bad.append(("fib-progression direct", n))
        L = lambda k: term(LUC, k)  # noqa: E731
        if cf.sum_pentad_progression(LUC, n, 0, 1, 0) != Fraction(L(5 * n + 5), 5) - Fraction(11 * 3**n, 5):
            bad.append(("lucas-progression direct", n))
    record("3 fixtures", not bad, f"{len(CONSTANT_FIXTURES)} fixtures over n=0..15, failures: {bad or 'none'}")
    assert not bad


def test_criterion_4_erratum():
    rep = verify_fixture("lucas-fifth-alt", range(16))
    first_bad = rep.failing_cells[0] if rep.failing_cells else None
    out = io.StringIO()
    main(["fixtures", "--id", "lucas-fifth-alt"], out=out)
    text = out.getvalue()
    ok = (
        rep.status == ERRATUM
        and first_bad is not None
        and first_bad <= 2
        and rep.corrected_ok
        and f"fails at n={first_bad}" in text
    )
    record("4 erratum", ok, f"printed form first fails at n={first_bad}; corrected form holds n=0..15: {rep.corrected_ok}")
    assert ok, text


LIMIT_CASES = [
    (FIB, -1, Fraction(1, 150), "fib-limit-3j"),
    (FIB, 4, Fraction(1, 150), "fib-limit-8j-alt"),
    (LUC, -1, Fraction(1, 4620), "lucas-limit-3j"),
    (LUC, 4, Fraction(1, 4620), "lucas-limit-8j-alt"),
]


def test_criterion_5_limits():
    tol = Fraction(1, 10**25)
    details, ok = [], True
    for p, m, value, fid in LIMIT_CASES:
        res = check_limit(p, 2, m, tol, 60)
        fx = verify_fixture(fid)
        good = (
            res.certified
            and res.limit == value
            and res.n_used <= 60
            and abs(res.remainders[-1]) < tol
            and res.partial_sums_exact is True
            and fx.printed_ok
        )
        ok = ok and good
        details.append(f"{value}@n={res.n_used}")
    record("5 limits", ok, ", ".join(details) + " (|R_n| < 1e-25, partial sums exact)")
    assert ok


def test_criterion_6_property_groups():
    fails = {k: 0 for k in ("lambda_parity", "linearity", "empty_sum", "integrality", "telescope_product")}
    # lambda parity: G[j+1]^2 - G[j]G[j+2] = (-1)^j lam
    for p in POOL:
        for j in range(-30, 31):
            if term(p, j + 1) ** 2 - term(p, j) * term(p, j + 2) != (-1) ** (j % 2) * lam(p):
                fails["lambda_parity"] += 1
    # linearity in (a, b)
    for (a1, b1), (a2, b2) in itertools.product([(0, 1), (2, 1), (3, -4)], [(1, 1), (-2, 5), (7, 0)]):
        s = GibonacciParams(a1 + a2, b1 + b2)
        for j in range(-25, 26):
            if term(s, j) != term(GibonacciParams(a1, b1), j) + term(GibonacciParams(a2, b2), j):
                fails["linearity"] += 1
        for n, t in itertools.product(range(0, 6), range(-2, 3)):
            lhs = cf.sum_linear(s, n, t)
            if lhs != cf.sum_linear(GibonacciParams(a1, b1), n, t) + cf.sum_linear(GibonacciParams(a2, b2), n, t):
                fails["linearity"] += 1
    integral = {
        SumFamily.LINEAR, SumFamily.LINEAR_ALT, SumFamily.FIFTH, SumFamily.FIFTH_ALT,
        SumFamily.FIVE_PRODUCT, SumFamily.FIVE_PRODUCT_ALT, SumFamily.FIVE_PRODUCT_WEIGHTED,
        SumFamily.R_PRODUCT,
    }
    axes = dict(n=range(0, 13), t=range(-4, 5), m=range(-6, 7), r=range(2, 6), s=range(-2, 3))
    for fam in SumFamily:
        for p in POOL:
            for values in itertools.product(*(axes[a] for a in fam.args)):
                kw = dict(zip(fam.args, values))
                try:
                    value = cf.closed_form(fam, p, **kw)
                except ZeroTerm:
                    continue
                if kw["n"] == 0 and value != 0:
                    fails["empty_sum"] += 1
                if fam in integral and value.denominator != 1:
                    fails["integrality"] += 1
    for p in POOL:
        for n, t, m in itertools.product(range(0, 11), range(-4, 5), range(-6, 7)):
            c, d = fib(m + 2), -fib(m - 3)
            res = telescope_product(lambda j: term(p, j + t - 2), n, 5, c, d)
            if not res.equal or cf.sum_five_product_weighted(p, n, t, m) != c * res.rhs / 5:
                fails["telescope_product"] += 1
            if cf.sum_five_product_weighted(p, n, t, m) != direct_sum(SumFamily.FIVE_PRODUCT_WEIGHTED, p, n, t=t, m=m).value:
                fails["telescope_product"] += 1
    ok = not any(fails.values())
    record("6 properties", ok, ", ".join(f"{k}={v}" for k, v in fails.items()) + " failures")
    assert ok, fails
