"""Verify every sum family on a grid and write JSON and markdown reports.

    python3 scripts/run_full_verification.py --out reports/ [--grid default] [--workers 1]
"""
import argparse
import sys
from pathlib import Path

from gibosum.verifier import parse_grid, render_json, render_markdown, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--grid", default="default")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()

    reports = verify_all(parse_grid(args.grid), workers=args.workers)
    timing = not args.no_timing
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "verification.json").write_text(render_json(reports, timing=timing))
    md = render_markdown(reports, timing=timing)
    (args.out / "verification.md").write_text(md)
    print(md, end="")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
