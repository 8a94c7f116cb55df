"""Command line front end.

Subcommands::

    degree        --n N --d D [--method quotient|chchar|both]
    table         --n N --d-min A --d-max B [--format plain|json|csv|latex]
    closed-form   --n N [--format plain|json|latex]
    verify-paper  --n 3|4
    forms check-pullback --n N --d D --trials T --seed S
    selftest

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
inconsistency (non-integer integral, route disagreement, cache conflict).

Computed degrees are cached in a newline-delimited JSON file whose path
comes from the LPB_CACHE environment variable (default ./lpb-cache.jsonl).
Each record is ``{"n": int, "d": int, "degree": "<decimal>", "engine_version":
str}``; the degree is a decimal string because values outgrow 64-bit
integers quickly.  The file is append-only (one atomic write per record)
and deduplicated on load; two records disagreeing on one (n, d) key are a
fatal integrity error.  A cache hit is returned directly only for the
default quotient route; the other routes recompute and cross-check against
the cached value.

All output is deterministic: orderings are fixed and the arithmetic is
exact, so a given command line is byte-identical across runs.  JSON is
emitted with sorted keys and compact separators, so parsing and re-dumping
with those options reproduces the bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .foliation import (
    InternalInconsistencyError,
    METHOD_BOTH,
    METHOD_CH_PARTITION,
    METHOD_CHERN_QUOTIENT,
    closed_form,
    degree_lpb,
    lpb_invariants,
    reference_formula,
    reference_polynomial,
    virtual_rank_check,
)
from .forms import (
    contract_radial,
    dimension_vdn,
    integrability_defect,
    pullback_linear,
    random_form,
    random_projection,
    recover,
)
from .grassmann import GrassContext

DEFAULT_CACHE_PATH = "./lpb-cache.jsonl"
CACHE_ENV_VAR = "LPB_CACHE"

_METHOD_FLAGS = {
    "quotient": METHOD_CHERN_QUOTIENT,
    "chchar": METHOD_CH_PARTITION,
    "both": METHOD_BOTH,
}


class UsageError(Exception):
    """Bad command line or bad argument combination; exit code 1."""


class CacheConflictError(InternalInconsistencyError):
    """The degree cache contradicts itself or a fresh computation; exit code 3."""


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so main() owns exit codes."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


class DegreeCache:
    """Append-only newline-delimited JSON cache of degrees keyed by (n, d)."""

    def __init__(self, path: str | None = None) -> None:
        if path is None:
            path = os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_PATH)
        self.path = path
        self._entries: dict[tuple[int, int], int] = {}
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    n = int(record["n"])
                    d = int(record["d"])
                    degree = int(record["degree"])
                except (KeyError, TypeError, ValueError) as exc:
                    raise CacheConflictError(
                        f"cache file {self.path} line {line_no} is malformed: {exc}"
                    ) from exc
                if degree < 0:
                    raise CacheConflictError(
                        f"cache file {self.path} line {line_no} holds a negative degree"
                    )
                key = (n, d)
                if key in self._entries and self._entries[key] != degree:
                    raise CacheConflictError(
                        f"cache holds conflicting degrees for (n, d) = {key}: "
                        f"{self._entries[key]} vs {degree}"
                    )
                self._entries[key] = degree

    def get(self, n: int, d: int) -> int | None:
        return self._entries.get((n, d))

    def put(self, n: int, d: int, degree: int) -> None:
        key = (n, d)
        known = self._entries.get(key)
        if known is not None:
            if known != degree:
                raise CacheConflictError(
                    f"cache value {known} for (n, d) = {key} disagrees with computed {degree}"
                )
            return
        record = {"n": n, "d": d, "degree": str(degree), "engine_version": __version__}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
        self._entries[key] = degree

    def degree_fn(self, n: int) -> Callable[[int], int]:
        """A degree evaluator routed through this cache, for interpolation."""

        def fn(d: int) -> int:
            return self.resolve(n, d, METHOD_CHERN_QUOTIENT)

        return fn

    def resolve(self, n: int, d: int, method: str) -> int:
        """Degree with caching: hit short-circuits only the quotient route.

        Other routes recompute and must agree with any cached value, which
        turns the cache into one more cross-check instead of a bypass.
        """
        hit = self.get(n, d)
        if hit is not None and method == METHOD_CHERN_QUOTIENT:
            return hit
        value = degree_lpb(d, n, method=method)
        if hit is not None and hit != value:
            raise CacheConflictError(
                f"cached degree {hit} for (n, d) = ({n}, {d}) disagrees with computed {value}"
            )
        self.put(n, d, value)
        return value


def _check_positive(n: int, d: int, value: int) -> None:
    # the degree of an irreducible projective variety is positive; d < 2 is
    # outside the geometric range and exempt
    if d >= 2 and value <= 0:
        raise InternalInconsistencyError(
            f"degree at (d, n) = ({d}, {n}) must be positive, got {value}"
        )


def _frac_str(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _json_dumps(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _coefficient_latex(c: Fraction, power: int) -> str:
    c = Fraction(c)
    sign = "-" if c < 0 else ""
    mag = abs(c)
    if mag.denominator == 1:
        body = str(mag.numerator)
    else:
        body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
    if power == 0:
        return f"{sign}{body}"
    var = "d" if power == 1 else f"d^{{{power}}}"
    if mag == 1:
        return f"{sign}{var}"
    return f"{sign}{body} {var}"


def _poly_latex(coeffs: Sequence[Fraction]) -> str:
    pieces = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        rendered = _coefficient_latex(c, power)
        if not pieces:
            pieces.append(rendered)
        elif rendered.startswith("-"):
            pieces.append("- " + rendered[1:])
        else:
            pieces.append("+ " + rendered)
    if not pieces:
        return "0"
    return " ".join(pieces)


def _cmd_degree(args: argparse.Namespace) -> int:
    cache = DegreeCache()
    value = cache.resolve(args.n, args.d, _METHOD_FLAGS[args.method])
    _check_positive(args.n, args.d, value)
    marker = " (formal)" if args.d < 2 else ""
    print(f"{value}{marker}")
    return 0


def _table_rows(n: int, d_min: int, d_max: int) -> list[tuple[int, int, int, bool]]:
    if d_min > d_max:
        raise UsageError("--d-min must not exceed --d-max")
    cache = DegreeCache()
    rows = []
    for d in range(d_min, d_max + 1):
        value = cache.resolve(n, d, METHOD_CHERN_QUOTIENT)
        _check_positive(n, d, value)
        rows.append((n, d, value, d < 2))
    return rows


def _cmd_table(args: argparse.Namespace) -> int:
    rows = _table_rows(args.n, args.d_min, args.d_max)
    if args.format == "plain":
        for n, d, value, formal in rows:
            marker = " formal" if formal else ""
            print(f"n={n} d={d} degree={value}{marker}")
    elif args.format == "csv":
        print("n,d,degree,formal")
        for n, d, value, formal in rows:
            print(f"{n},{d},{value},{'true' if formal else 'false'}")
    elif args.format == "json":
        payload = [
            {"n": n, "d": d, "degree": str(value), "formal": formal}
            for n, d, value, formal in rows
        ]
        print(_json_dumps(payload))
    else:
        print("\\begin{tabular}{rrr}")
        print("n & d & \\deg \\\\")
        print("\\hline")
        for n, d, value, formal in rows:
            marker = "^{*}" if formal else ""
            print(f"{n} & {d} & {value}{marker} \\\\")
        print("\\end{tabular}")
    return 0


def _cmd_closed_form(args: argparse.Namespace) -> int:
    cache = DegreeCache()
    poly = closed_form(args.n, cache.degree_fn(args.n))
    coeffs = [poly.coefficient(k) for k in range(poly.degree + 1)]
    if args.format == "plain":
        for k, c in enumerate(coeffs):
            print(f"d^{k}: {_frac_str(c)}")
    elif args.format == "json":
        payload = {
            "n": args.n,
            "degree": poly.degree,
            "coefficients": [_frac_str(c) for c in coeffs],
        }
        print(_json_dumps(payload))
    else:
        print(_poly_latex(coeffs))
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    cache = DegreeCache()
    engine = closed_form(args.n, cache.degree_fn(args.n))
    published = reference_polynomial(args.n)
    if engine == published:
        print("PASS")
        return 0
    print(f"MISMATCH for n = {args.n}: interpolated degree polynomial differs from the published form")
    top = max(engine.degree, published.degree)
    for k in range(top + 1):
        a = engine.coefficient(k)
        b = published.coefficient(k)
        if a != b:
            print(f"  d^{k}: engine={_frac_str(a)} published={_frac_str(b)}")
    return 2


def _trial_seed(seed: int, trial: int, salt: int) -> int:
    # distinct deterministic streams per trial for the form and the projection
    return seed * 1000003 + 2 * trial + salt


def _cmd_check_pullback(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    failures = 0
    for trial in range(args.trials):
        omega = random_form(2, args.d, _trial_seed(args.seed, trial, 0))
        proj = random_projection(args.n, _trial_seed(args.seed, trial, 1))
        mu = pullback_linear(proj, omega)
        problems = []
        if contract_radial(mu):
            problems.append("contraction nonzero")
        if any(defect for defect in integrability_defect(mu).values()):
            problems.append("integrability defect nonzero")
        if recover(proj, mu) != omega:
            problems.append("recovery mismatch")
        if problems:
            failures += 1
            print(f"trial {trial}: FAIL ({'; '.join(problems)})")
    print(
        f"check-pullback n={args.n} d={args.d}: "
        f"{args.trials - failures}/{args.trials} trials passed"
    )
    return 0 if failures == 0 else 2


def _selftest_checks() -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []
    for m, expected in ((4, 1), (5, 5), (6, 42)):
        got = GrassContext(3, m).plucker_degree()
        checks.append((f"plucker degree of G(3,{m}) = {expected}", got == expected))
    for d in range(0, 4):
        for n in (3, 4):
            value = degree_lpb(d, n, method=METHOD_BOTH)
            ok = value >= 0
            if n == 3:
                ok = ok and value == reference_formula(3, d)
            checks.append((f"degree routes agree at (d, n) = ({d}, {n})", ok))
    rank_ok = all(
        virtual_rank_check(d, 3) == (d + 1) * (d + 3) == dimension_vdn(2, d)
        for d in range(0, 11)
    )
    checks.append(("bundle rank equals (d+1)(d+3) equals dim of plane form space", rank_ok))
    checks.append(("component dimension at (d, n) = (2, 3) is 17", lpb_invariants(2, 3).dimension == 17))
    return checks


def _cmd_selftest(_: argparse.Namespace) -> int:
    failures = 0
    for name, ok in _selftest_checks():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1
    return 0 if failures == 0 else 2


def build_parser() -> _Parser:
    parser = _Parser(
        prog="lpbdeg",
        description="Exact degrees of linear pullback components of foliation spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("degree", help="one exact degree")
    p.add_argument("--n", type=int, required=True, help="ambient projective dimension")
    p.add_argument("--d", type=int, required=True, help="foliation degree")
    p.add_argument("--method", choices=sorted(_METHOD_FLAGS), default="quotient")
    p.set_defaults(handler=_cmd_degree)

    p = sub.add_parser("table", help="degrees over a range of d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d-min", dest="d_min", type=int, required=True)
    p.add_argument("--d-max", dest="d_max", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv", "latex"), default="plain")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("closed-form", help="interpolated degree polynomial in d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    p.set_defaults(handler=_cmd_closed_form)

    p = sub.add_parser("verify-paper", help="compare against the published closed form")
    p.add_argument("--n", type=int, choices=(3, 4), required=True)
    p.set_defaults(handler=_cmd_verify_paper)

    p_forms = sub.add_parser("forms", help="explicit 1-form checks")
    forms_sub = p_forms.add_subparsers(dest="forms_command", metavar="subcommand", parser_class=_Parser)
    forms_sub.required = True
    p = forms_sub.add_parser("check-pullback", help="pullback identity and recovery trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_check_pullback)

    p = sub.add_parser("selftest", help="fast internal consistency checks")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


def run(args: Sequence[str]) -> int:
    """Run one command line; returns the exit code without exiting."""
    return main(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
