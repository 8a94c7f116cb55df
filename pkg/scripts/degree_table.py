"""Tabulate exact degrees and dimensions over a grid of (n, d).

Example::

    python3 scripts/degree_table.py --n 3 4 --d-min 2 --d-max 8 --format csv
"""

import argparse
import sys
from time import perf_counter

from lpbdeg.foliation import degree_lpb, lpb_invariants


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4], help="ambient dimensions")
    parser.add_argument("--d-min", dest="d_min", type=int, default=2)
    parser.add_argument("--d-max", dest="d_max", type=int, default=8)
    parser.add_argument("--format", choices=("plain", "csv"), default="plain")
    args = parser.parse_args(argv)
    if args.d_min > args.d_max:
        parser.error("--d-min must not exceed --d-max")

    if args.format == "csv":
        print("n,d,degree,dimension,seconds")
    total = perf_counter()
    for n in args.n:
        for d in range(args.d_min, args.d_max + 1):
            start = perf_counter()
            value = degree_lpb(d, n)
            elapsed = perf_counter() - start
            dim = lpb_invariants(d, n).dimension
            if args.format == "csv":
                print(f"{n},{d},{value},{dim},{elapsed:.3f}")
            else:
                print(f"n={n} d={d} degree={value} dimension={dim} ({elapsed:.3f}s)")
    print(f"total {perf_counter() - total:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
