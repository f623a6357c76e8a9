"""Tabulate the certified reciprocal limits for a few seeds and weightings.

    python3 scripts/limit_table.py [--tol 1e-25] [--max-n 60]
"""
import argparse
from fractions import Fraction

from gibosum.errors import NotConverged, ZeroTerm
from gibosum.seq import FIBONACCI, LUCAS, GibonacciParams
from gibosum.verifier import check_limit

SEEDS = [FIBONACCI, LUCAS, GibonacciParams(1, 1), GibonacciParams(3, -4)]
WEIGHTS = [-1, 0, 1, 4, 6]  # m values


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tol", type=Fraction, default=Fraction(1, 10**25))
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--t", type=int, default=2)
    args = ap.parse_args()

    print(f"{'seed':>8} {'m':>3}  {'limit':<24} {'n':>3}  exact")
    for p in SEEDS:
        for m in WEIGHTS:
            try:
                res = check_limit(p, args.t, m, args.tol, args.max_n)
            except ZeroTerm as exc:
                print(f"{str(p):>8} {m:>3}  zero term at index {exc.index}")
                continue
            except NotConverged:
                print(f"{str(p):>8} {m:>3}  not converged by n={args.max_n}")
                continue
            print(f"{str(p):>8} {m:>3}  {str(res.limit):<24} {res.n_used:>3}  {res.partial_sums_exact}")


if __name__ == "__main__":
    main()
