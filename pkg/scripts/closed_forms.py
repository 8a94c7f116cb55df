"""Interpolate the closed-form degree polynomials and check the known cases.

For each requested n the engine degree is sampled at 3g+1 nodes plus one
held-out verification node (g = 3(n-2)), the unique polynomial through the
nodes is printed, and for n in {3, 4} it is compared against the published
closed form.

Example::

    python3 scripts/closed_forms.py --n 3 4
"""

import argparse
from fractions import Fraction
from time import perf_counter

from lpbdeg.foliation import closed_form, degree_lpb, reference_polynomial


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4])
    parser.add_argument("--quiet-nodes", action="store_true", help="suppress per-node timing")
    args = parser.parse_args(argv)

    failures = 0
    for n in args.n:

        def timed_degree(d: int) -> int:
            start = perf_counter()
            value = degree_lpb(d, n)
            if not args.quiet_nodes:
                print(f"  node d={d}: {value} ({perf_counter() - start:.3f}s)")
            return value

        print(f"n = {n}")
        start = perf_counter()
        poly = closed_form(n, timed_degree)
        print(f"  interpolated degree-{poly.degree} polynomial in {perf_counter() - start:.3f}s")
        for k in range(poly.degree, -1, -1):
            c = poly.coefficient(k)
            if c:
                print(f"  d^{k}: {_frac(c)}")
        if n in (3, 4):
            if poly == reference_polynomial(n):
                print("  matches the published closed form")
            else:
                print("  MISMATCH against the published closed form")
                failures += 1
        else:
            print("  no published form to compare against")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
