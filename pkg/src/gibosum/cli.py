"""Command-line front end.

Exit codes: 0 all pass, 1 an identity or certification failed, 2 usage
error, 3 domain error (zero denominator term in a requested evaluation).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import closed_forms, oracle
from .errors import NotConverged, ZeroTerm
from .families import SumFamily
from .fixtures import CATALOG, ERRATUM
from .seq import GibonacciParams
from .verifier import (
    check_limit,
    parse_grid,
    render_json,
    render_markdown,
    verify_all,
    verify_family,
    verify_fixture,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

FAMILY_FORMS = {
    SumFamily.LINEAR: "Σ G_{j+t}",
    SumFamily.LINEAR_ALT: "Σ (−1)^{j−1} G_{j+t}",
    SumFamily.FIFTH: "Σ G_{j+t}^5",
    SumFamily.FIFTH_ALT: "Σ (−1)^{j−1} G_{j+t}^5",
    SumFamily.FIVE_PRODUCT: "Σ G_{j+t−1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}",
    SumFamily.FIVE_PRODUCT_ALT: "Σ (−1)^{j−1} G_{j+t−1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}",
    SumFamily.FIVE_PRODUCT_WEIGHTED: "Σ (−F_{m−3})^{n−j} F_{m+2}^j G_{j+t−1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}",
    SumFamily.PENTAD_PROGRESSION: "Σ (−F_{m−5})^{n−j} F_m^{j−1} G_{5(j+t)+m+s}",
    SumFamily.RECIPROCAL: "Σ (−F_{m+2})^{n−j} F_{m−3}^{j−1} G_{j+t+m} / (G_{j+t−2} … G_{j+t+3})",
    SumFamily.R_PRODUCT: "Σ (−1)^{r(n−j)} F_{m−r}^{n−j} F_m^{j−1} G_{j+t+1} … G_{j+t+r−1} G_{j+t+m}",
    SumFamily.R_RECIPROCAL: "Σ (−1)^{rj} F_m^{n−j} F_{m−r}^{j−1} G_{j+t+m} / (G_{j+t} … G_{j+t+r})",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _family(text: str) -> SumFamily:
    try:
        return SumFamily.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gibosum", description="Exact gibonacci summation identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", help="list sum families and the fixture catalog")

    ev = sub.add_parser("eval", help="closed form vs direct sum at one point")
    ev.add_argument("--family", type=_family, required=True)
    ev.add_argument("--a", type=int, required=True)
    ev.add_argument("--b", type=int, required=True)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--t", type=int, default=0)
    ev.add_argument("--m", type=int, default=0)
    ev.add_argument("--r", type=int, default=2)
    ev.add_argument("--s", type=int, default=0)

    ve = sub.add_parser("verify", help="exhaustive grid verification")
    which = ve.add_mutually_exclusive_group()
    which.add_argument("--family", type=_family)
    which.add_argument("--all", action="store_true")
    ve.add_argument("--grid", default="default")
    ve.add_argument("--report", type=Path)
    ve.add_argument("--format", choices=("json", "markdown"), default="json")
    ve.add_argument("--workers", type=int, default=1)
    ve.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0")

    fx = sub.add_parser("fixtures", help="check the displayed special cases")
    fx.add_argument("--id", dest="fixture_id")
    fx.add_argument(
        "--expect-errata",
        action="store_true",
        help="count suspected-erratum entries as passing when only the corrected form holds",
    )

    li = sub.add_parser("limit", help="certify an infinite reciprocal sum")
    li.add_argument("--family", type=_family, default=SumFamily.RECIPROCAL)
    li.add_argument("--a", type=int, required=True)
    li.add_argument("--b", type=int, required=True)
    li.add_argument("--t", type=int, required=True)
    li.add_argument("--m", type=int, required=True)
    li.add_argument("--tol", type=_rational, default=Fraction(1, 10**25))
    li.add_argument("--max-n", type=int, default=60)
    return p


def _params(args) -> GibonacciParams:
    try:
        return GibonacciParams(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_list(args, out) -> int:
    print("families:", file=out)
    for fam in SumFamily:
        print(f"  {fam.value:<22} [{','.join(fam.args)}]  {FAMILY_FORMS[fam]}", file=out)
    print(f"fixtures ({len(CATALOG)}):", file=out)
    for e in CATALOG.values():
        tag = " (suspected erratum)" if e.status == ERRATUM else ""
        print(f"  {e.id:<28} {e.family.value:<22} {e.label}{tag}", file=out)
    return EXIT_OK


def cmd_eval(args, out) -> int:
    fam = args.family
    params = _params(args)
    kw = {k: getattr(args, k) for k in fam.args}
    try:
        cf = closed_forms.closed_form(fam, params, **kw)
    except ZeroTerm as exc:
        print(f"domain error: zero term at index {exc.index}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = oracle.direct_sum(fam, params, **kw)
    if res.zero_hit is not None:
        print(f"domain error: zero term at index {res.zero_hit}", file=sys.stderr)
        return EXIT_DOMAIN
    ok = cf == res.value
    point = " ".join(f"{k}={v}" for k, v in kw.items())
    print(f"{fam.value} params={params} {point}", file=out)
    print(f"  closed form: {cf}", file=out)
    print(f"  direct sum:  {res.value}", file=out)
    print(f"  {cf} {'=' if ok else '!='} {res.value}  {'PASS' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.family is not None:
        reports = [verify_family(args.family, grid, workers=args.workers)]
    else:
        reports = verify_all(grid, workers=args.workers)
    timing = not args.no_timing
    out.write(render_markdown(reports, timing=timing))
    if args.report is not None:
        render = render_json if args.format == "json" else render_markdown
        args.report.write_text(render(reports, timing=timing))
        print(f"report written to {args.report}", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_fixtures(args, out) -> int:
    ids = [args.fixture_id] if args.fixture_id else list(CATALOG)
    if args.fixture_id and args.fixture_id not in CATALOG:
        raise UsageError(f"unknown fixture {args.fixture_id!r}")
    code = EXIT_OK
    for fid in ids:
        rep = verify_fixture(fid)
        if rep.limit is not None:
            ok = rep.printed_ok and rep.limit.certified
            print(
                f"{'PASS' if ok else 'FAIL'}  {fid}: limit {rep.limit.limit} "
                f"certified at n={rep.limit.n_used}",
                file=out,
            )
        elif rep.printed_ok:
            ok = True
            print(f"PASS  {fid}: n=0..15", file=out)
        else:
            bad = rep.failing_cells
            first = dict(rep.checks)[bad[0]]
            msg = (
                f"{fid}: printed form fails at n={','.join(map(str, bad[:5]))}"
                f"{'...' if len(bad) > 5 else ''} "
                f"(n={bad[0]}: lhs {first.lhs}, rhs {first.rhs})"
            )
            if rep.status == ERRATUM:
                msg += "; corrected form " + ("holds n=0..15" if rep.corrected_ok else "FAILS")
            ok = args.expect_errata and rep.passed
            print(f"{'PASS' if ok else 'FAIL'}  {msg}", file=out)
        if not ok:
            code = EXIT_FAIL
    return code


def cmd_limit(args, out) -> int:
    if args.family is not SumFamily.RECIPROCAL:
        raise UsageError("limits are only defined for the reciprocal family")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    params = _params(args)
    try:
        res = check_limit(params, args.t, args.m, args.tol, args.max_n)
    except ZeroTerm as exc:
        print(f"domain error: zero term at index {exc.index}", file=sys.stderr)
        return EXIT_DOMAIN
    except NotConverged as exc:
        print(f"NOT CONVERGED: {exc}", file=out)
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"limit {res.limit} ({float(res.limit):.12g})", file=out)
    print(f"  certified at n={res.n_used}, |remainder| = {float(abs(res.remainders[-1])):.3e}", file=out)
    print(f"  partial sums exact: {res.partial_sums_exact}", file=out)
    return EXIT_OK if res.partial_sums_exact else EXIT_FAIL


COMMANDS = {
    "list": cmd_list,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "fixtures": cmd_fixtures,
    "limit": cmd_limit,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
