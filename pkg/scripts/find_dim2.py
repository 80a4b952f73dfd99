"""Search the integer grid for parameters where a pair-to-pair hom space is
two-dimensional (the four-atom criterion), and confirm by brute force."""

import argparse
import pathlib
import sys
from fractions import Fraction
from itertools import permutations

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from cherednik2.homspaces import dimension_two_criterion, hom_dim_bruteforce
from cherednik2.labels import Label, Params
from cherednik2.sweep import d_vectors, reduce_by_rotation


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, nargs="+", default=[3, 4])
    parser.add_argument("--bound", type=int, default=8)
    parser.add_argument("--c0", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--limit", type=int, default=5,
                        help="stop after this many confirmed instances")
    parser.add_argument("--cap", type=int, default=25)
    args = parser.parse_args()

    found = 0
    for r in args.r:
        for dv in reduce_by_rotation(d_vectors(r, args.bound)):
            for c0 in args.c0:
                p = Params.make(r, Fraction(c0), dv)
                for i, j, k in permutations(range(r), 3):
                    if not dimension_two_criterion(p, i, j, k):
                        continue
                    dim = hom_dim_bruteforce(Label.pair(i, k), Label.pair(i, j),
                                             p, args.cap)
                    print(f"r={r} c0={c0} d={dv} (i,j,k)=({i},{j},{k}): "
                          f"criterion holds, brute dim = {dim}"
                          + ("" if dim == 2 else "  <-- UNEXPECTED"))
                    found += 1
                    if found >= args.limit:
                        return 0
    if not found:
        print("no instance found on this grid")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
