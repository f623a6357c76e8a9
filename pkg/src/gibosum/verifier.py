"""Grid and fixture verification of closed forms against the oracle."""
from __future__ import annotations

import itertools
import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import closed_forms, oracle
from .closed_forms import LimitResult
from .errors import ZeroTerm
from .families import SumFamily
from .fixtures import CATALOG, ERRATUM, FixtureEntry, get_fixture
from .pointwise import IdentityCheck, check
from .seq import GibonacciParams

__all__ = [
    "Grid",
    "DEFAULT_POOL",
    "default_grid",
    "parse_grid",
    "VerificationReport",
    "FixtureReport",
    "verify_family",
    "verify_all",
    "verify_fixture",
    "run_fixtures",
    "find_min_counterexample",
    "check_limit",
    "render_json",
    "render_markdown",
    "report_from_dict",
]

DEFAULT_POOL = (
    GibonacciParams(0, 1),
    GibonacciParams(2, 1),
    GibonacciParams(1, 1),
    GibonacciParams(3, -4),
    GibonacciParams(-2, 5),
)
FIXTURE_N = range(0, 16)

Range = tuple[int, int]  # inclusive


@dataclass(frozen=True)
class Grid:
    params_pool: tuple[GibonacciParams, ...] = DEFAULT_POOL
    n_range: Range = (0, 25)
    t_range: Range = (-5, 5)
    m_range: Range = (-8, 8)
    r_range: Range = (2, 6)
    s_range: Range = (-3, 3)

    def __post_init__(self) -> None:
        if not self.params_pool:
            raise ValueError("empty params pool")
        for name in ("n_range", "t_range", "m_range", "r_range", "s_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo}..{hi}")
        if self.n_range[0] < 0:
            raise ValueError("n_range must start at >= 0")

    def cells(self, family: SumFamily) -> Iterator[tuple[int, dict[str, int]]]:
        """(params index, args) in lexicographic order of params, n, t, m, r, s."""
        for pi in range(len(self.params_pool)):
            for args in self.args_for(family):
                yield pi, args

    def args_for(self, family: SumFamily) -> Iterator[dict[str, int]]:
        axes = [(a, range(lo, hi + 1)) for a, (lo, hi) in self.ranges().items() if a in family.args]
        names = [a for a, _ in axes]
        for values in itertools.product(*(rng for _, rng in axes)):
            yield dict(zip(names, values))

    def ranges(self) -> dict[str, Range]:
        return {
            "n": self.n_range,
            "t": self.t_range,
            "m": self.m_range,
            "r": self.r_range,
            "s": self.s_range,
        }

    def summary(self) -> dict:
        out = {"params": [f"{p.a}:{p.b}" for p in self.params_pool]}
        out.update({k: f"{lo}..{hi}" for k, (lo, hi) in self.ranges().items()})
        return out


def default_grid() -> Grid:
    return Grid()


_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def parse_grid(text: str) -> Grid:
    """Parse ``"n=0..25,t=-5..5,params=0:1|2:1"``; ``"default"`` or ``""`` gives the default.

    Missing keys keep their defaults; a single integer means a one-point range.
    """
    text = text.strip()
    if text in ("", "default"):
        return default_grid()
    kw: dict = {}
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"bad grid field {part!r}")
        key, val = (x.strip() for x in part.split("=", 1))
        if key == "params":
            pool = []
            for item in val.split("|"):
                a, b = item.split(":")
                pool.append(GibonacciParams(int(a), int(b)))
            kw["params_pool"] = tuple(pool)
        elif key in ("n", "t", "m", "r", "s"):
            mt = _RANGE_RE.match(val)
            if not mt:
                raise ValueError(f"bad range {val!r} for {key}")
            lo = int(mt.group(1))
            hi = int(mt.group(2)) if mt.group(2) is not None else lo
            kw[f"{key}_range"] = (lo, hi)
        else:
            raise ValueError(f"unknown grid key {key!r}")
    return Grid(**kw)


@dataclass
class VerificationReport:
    family: SumFamily
    grid: dict
    cells_checked: int = 0
    cells_skipped_zero: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "family": self.family.value,
            "grid": self.grid,
            "cells_checked": self.cells_checked,
            "cells_skipped_zero": self.cells_skipped_zero,
            "failures": [
                {
                    "point": f["point"],
                    "lhs": str(f["lhs"]),
                    "rhs": str(f["rhs"]),
                }
                for f in self.failures
            ],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }


def report_from_dict(d: dict) -> VerificationReport:
    """Inverse of :meth:`VerificationReport.to_dict`; rationals parse exactly."""
    return VerificationReport(
        family=SumFamily.parse(d["family"]),
        grid=d["grid"],
        cells_checked=d["cells_checked"],
        cells_skipped_zero=d["cells_skipped_zero"],
        failures=[
            {"point": f["point"], "lhs": Fraction(f["lhs"]), "rhs": Fraction(f["rhs"])}
            for f in d["failures"]
        ],
        elapsed_ms=d["elapsed_ms"],
    )


ClosedForm = Callable[..., Fraction]


def _eval_cell(family, closed, params, args) -> tuple[str, Optional[tuple[Fraction, Fraction]]]:
    try:
        cf = closed(params, *(args[a] for a in family.args))
    except ZeroTerm:
        return "skip", None
    res = oracle.direct_sum(family, params, **args)
    if res.zero_hit is not None:
        return "skip", None
    if cf == res.value:
        return "ok", None
    return "fail", (res.value, cf)


def _point(grid: Grid, pi: int, args: dict) -> dict:
    p = grid.params_pool[pi]
    return {"params": f"{p.a}:{p.b}", **args}


def verify_family(
    family: SumFamily,
    grid: Grid,
    workers: int = 1,
    closed: Optional[ClosedForm] = None,
) -> VerificationReport:
    """Compare closed form and oracle on every grid cell.

    ``closed`` overrides the closed form (used to inject faults).  With
    ``workers > 1`` cells are evaluated concurrently per params entry and
    merged back in grid order.
    """
    closed = closed or closed_forms.CLOSED_FORMS[family]
    start = time.perf_counter()
    report = VerificationReport(family=family, grid=grid.summary())

    def run_params(pi: int) -> list:
        params = grid.params_pool[pi]
        return [
            (pi, args, *_eval_cell(family, closed, params, args))
            for args in grid.args_for(family)
        ]

    indices = range(len(grid.params_pool))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run_params, indices))
    else:
        chunks = [run_params(pi) for pi in indices]

    for chunk in chunks:
        for pi, args, status, values in chunk:
            if status == "skip":
                report.cells_skipped_zero += 1
                continue
            report.cells_checked += 1
            if status == "fail":
                lhs, rhs = values
                report.failures.append({"point": _point(grid, pi, args), "lhs": lhs, "rhs": rhs})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_all(grid: Grid, workers: int = 1) -> list[VerificationReport]:
    return [verify_family(f, grid, workers=workers) for f in SumFamily]


def find_min_counterexample(
    family: SumFamily, grid: Grid, closed: Optional[ClosedForm] = None
) -> Optional[dict]:
    """First failing cell in grid order, or ``None``; stops at the first failure."""
    closed = closed or closed_forms.CLOSED_FORMS[family]
    for pi, args in grid.cells(family):
        status, _ = _eval_cell(family, closed, grid.params_pool[pi], args)
        if status == "fail":
            return _point(grid, pi, args)
    return None


def check_limit(
    params: GibonacciParams,
    t: int,
    m: int,
    tol: Fraction = Fraction(1, 10**25),
    max_n: int = 60,
) -> LimitResult:
    """Certify the infinite reciprocal sum and confirm every partial sum exactly.

    Partial sums are accumulated from the oracle's series terms and must equal
    ``limit - remainder`` at each step; ``partial_sums_exact`` records that.
    """
    result = closed_forms.limit_reciprocal(params, t, m, tol, max_n)
    partial = Fraction(0)
    exact = True
    for n, rem in enumerate(result.remainders, start=1):
        partial += oracle.reciprocal_series_term(params, n, t, m)
        exact = exact and partial == result.limit - rem
    result.partial_sums_exact = exact
    return result


@dataclass
class FixtureReport:
    id: str
    status: str
    checks: list[tuple[int, IdentityCheck]]
    corrected: list[tuple[int, IdentityCheck]] = field(default_factory=list)
    limit: Optional[LimitResult] = None

    @property
    def printed_ok(self) -> bool:
        return all(c.equal for _, c in self.checks)

    @property
    def corrected_ok(self) -> bool:
        return bool(self.corrected) and all(c.equal for _, c in self.corrected)

    @property
    def failing_cells(self) -> list[int]:
        return [n for n, c in self.checks if not c.equal]

    @property
    def passed(self) -> bool:
        """Verified entries must hold as printed; errata must fail as printed and hold corrected."""
        if self.status == ERRATUM:
            return not self.printed_ok and self.corrected_ok
        return self.printed_ok


def _fixture_lhs(entry: FixtureEntry, n: int) -> Fraction:
    total = sum((entry.summand(j, n) for j in range(1, n + 1)), Fraction(0))
    return entry.scale(n) * total


def verify_fixture(fixture_id: str, n_values=FIXTURE_N) -> FixtureReport:
    entry = get_fixture(fixture_id)
    if entry.is_limit:
        result = check_limit(entry.params, entry.t, entry.m)
        checks = [(result.n_used, check(result.limit, entry.limit))]
        # printed summand, summed directly, against limit - remainder
        partial = Fraction(0)
        for n, rem in enumerate(result.remainders, start=1):
            partial += entry.summand(n, n)
            checks.append((n, check(partial, result.limit - rem)))
        return FixtureReport(entry.id, entry.status, checks, limit=result)
    checks = [(n, check(_fixture_lhs(entry, n), entry.rhs(n))) for n in n_values]
    corrected = []
    if entry.corrected_rhs is not None:
        corrected = [
            (n, check(_fixture_lhs(entry, n), entry.corrected_rhs(n))) for n in n_values
        ]
    return FixtureReport(entry.id, entry.status, checks, corrected)


def run_fixtures(ids=None) -> list[FixtureReport]:
    return [verify_fixture(i) for i in (ids or CATALOG)]


def render_json(reports: list[VerificationReport], timing: bool = True) -> str:
    doc = {
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict(timing=timing) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_markdown(reports: list[VerificationReport], timing: bool = True) -> str:
    lines = [
        "| family | cells_checked | cells_skipped_zero | failures | elapsed_ms |",
        "|---|---:|---:|---:|---:|",
    ]
    for r in reports:
        d = r.to_dict(timing=timing)
        lines.append(
            f"| {d['family']} | {d['cells_checked']} | {d['cells_skipped_zero']} "
            f"| {len(d['failures'])} | {d['elapsed_ms']} |"
        )
    for r in reports:
        d = r.to_dict(timing=timing)
        if d["failures"]:
            lines += ["", f"### {d['family']} failures", "", "| point | lhs | rhs |", "|---|---|---|"]
            for f in d["failures"]:
                pt = " ".join(f"{k}={v}" for k, v in f["point"].items())
                lines.append(f"| {pt} | {f['lhs']} | {f['rhs']} |")
    lines += ["", "grid: " + json.dumps(reports[0].grid if reports else {}, sort_keys=True)]
    return "\n".join(lines) + "\n"
