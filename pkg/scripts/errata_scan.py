"""Check every catalog fixture and list the ones that fail as displayed.

    python3 scripts/errata_scan.py [--n-max 15]
"""
import argparse
import sys

from gibosum.fixtures import CATALOG, ERRATUM
from gibosum.verifier import verify_fixture


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=15)
    args = ap.parse_args()

    unexpected = 0
    for fid, entry in CATALOG.items():
        rep = verify_fixture(fid, range(args.n_max + 1))
        if rep.printed_ok:
            continue
        n0 = rep.failing_cells[0]
        cell = dict(rep.checks)[n0]
        line = f"{fid}: fails at n={n0} (lhs {cell.lhs}, rhs {cell.rhs})"
        if entry.corrected_rhs is not None:
            line += f"; corrected form {'holds' if rep.corrected_ok else 'also fails'}"
        if entry.status != ERRATUM or not rep.corrected_ok:
            unexpected += 1
            line += "  [unexpected]"
        print(line)
    print(f"{len(CATALOG)} fixtures scanned, {unexpected} unexpected failures")
    return 1 if unexpected else 0


if __name__ == "__main__":
    sys.exit(main())
