"""Run the classifier-vs-bruteforce sweep over the integer parameter grid.

Examples:
    python scripts/run_sweep.py                       # the full default grid
    python scripts/run_sweep.py --rs 3 --bound 5      # a smaller slice
    python scripts/run_sweep.py --no-reduce           # skip symmetry reduction
"""

import argparse
import pathlib
import sys
import time
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from cherednik2.sweep import GRID_C0, sweep_grid


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rs", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--bound", type=int, default=8)
    parser.add_argument("--cap", type=int, default=25)
    parser.add_argument("--c0", type=str, nargs="+", default=None,
                        help="c0 values as p/q strings (default: the full grid)")
    parser.add_argument("--no-reduce", action="store_true",
                        help="disable the rotation and sign symmetry reductions")
    parser.add_argument("--show-findings", type=int, default=10)
    args = parser.parse_args()

    c0s = tuple(Fraction(x) for x in args.c0) if args.c0 else GRID_C0
    t0 = time.time()
    res = sweep_grid(rs=tuple(args.rs), c0s=c0s, bound=args.bound, cap=args.cap,
                     rotation_reduce=not args.no_reduce,
                     sign_reduce=not args.no_reduce,
                     progress=lambda msg: print(msg, flush=True))
    print(f"\ntotal {time.time() - t0:.1f}s")
    print(res.summary())
    if res.vanishing_composites:
        print(f"\nvanishing composites ({len(res.vanishing_composites)}): the "
              "two-condition rules fire but no morphism exists")
        for d in res.vanishing_composites[:args.show_findings]:
            print("  ", d)
    if res.constructive_gaps:
        print(f"\nconstructive gaps ({len(res.constructive_gaps)}): the morphism "
              "exists but every catalogued construction vanishes")
        for d in res.constructive_gaps[:args.show_findings]:
            print("  ", d)
    if res.dim_findings:
        print("\nDIMENSION FINDINGS (above 2):")
        for d in res.dim_findings:
            print("  ", d)
    if res.discrepancies:
        print("\nUNEXPLAINED DISCREPANCIES:")
        for d in res.discrepancies:
            print("  ", d)
        return 1
    print("\nno unexplained discrepancies")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
