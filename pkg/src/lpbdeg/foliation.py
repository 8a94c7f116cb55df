"""Degrees and dimensions of linear pullback components.

The space of degree-d codimension-one foliations on projective n-space has
an irreducible component whose general member is the pullback of a plane
foliation under a linear projection.  Over the Grassmannian of 3-planes in
(n+1)-space, the coefficient vectors of such pullbacks form a vector bundle
of rank (d+1)(d+3); the component's degree is the integral of the top Segre
class of that bundle, and its dimension is the Grassmannian dimension plus
the projectivized fiber dimension.

Two independent evaluation routes are implemented for the degree.  The
default inverts the total Chern class of the bundle; the second assembles
the Segre class from graded Chern characters of the dual bundle via the
partition-weighted character sum.  The routes share only the enumeration of
Chern roots, so exact agreement is a strong correctness check.

For fixed n the degree is a polynomial in d of degree at most 3g with
g = 3(n-2); :func:`closed_form` recovers it by exact interpolation with one
held-out verification node.  :func:`reference_formula` hard-codes the two
published closed forms (n = 3 and n = 4) for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .bundles import (
    Minus,
    Sym,
    TAUT,
    Tensor,
    VirtualBundleExpr,
    chern_character_graded,
    chern_roots,
    dual,
    total_segre,
)
from .exact import Scalar, UniPoly, lagrange_interpolate
from .grassmann import GrassContext
from .symfunc import segre_via_characters

METHOD_CHERN_QUOTIENT = "chern_quotient"
METHOD_CH_PARTITION = "ch_partition"
METHOD_BOTH = "both"
_METHODS = (METHOD_CHERN_QUOTIENT, METHOD_CH_PARTITION, METHOD_BOTH)


class InternalInconsistencyError(RuntimeError):
    """Two computations that must agree exactly produced different values.

    Raised for non-integral Segre integrals, disagreement between the two
    degree routes, a failed interpolation verification node, and cache
    entries that contradict a fresh computation.  Any of these means a bug,
    never a tolerance issue, since all arithmetic is exact.
    """


def pullback_forms_bundle(d: int) -> VirtualBundleExpr:
    """Virtual bundle of pulled-back 1-form coefficient vectors.

    Over the Grassmannian of 3-planes, pulling a plane 1-form of foliation
    degree d back along the projection defined by a 3-plane lands in the
    kernel of the contraction map from Sym^{d+1}T (x) T to Sym^{d+2}T, with
    T the tautological subbundle.  The returned difference of honest
    bundles cancels to that kernel, of rank (d+1)(d+3).
    """
    if d < 0:
        raise ValueError("foliation degree must be nonnegative")
    return Minus(Tensor(Sym(d + 1, TAUT), TAUT), Sym(d + 2, TAUT))


def _require_integer(value: Scalar, what: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise InternalInconsistencyError(f"{what} is not an integer: {value}")
        return int(value)
    return int(value)


def degree_lpb(d: int, n: int, method: str = METHOD_CHERN_QUOTIENT) -> int:
    """Degree of the linear pullback component for foliation degree d on P^n.

    ``method`` selects the evaluation route: ``"chern_quotient"`` (invert
    the total Chern class), ``"ch_partition"`` (partition-weighted character
    sum), or ``"both"`` (run both and insist on exact agreement).

    Values with d < 2 are formal: the Segre integral is defined there, but
    the geometric component interpretation needs d >= 2.
    """
    if d < 0:
        raise ValueError("foliation degree must be nonnegative")
    if n < 3:
        raise ValueError("ambient projective dimension must be at least 3")
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    ctx = GrassContext(3, n + 1)
    expr = pullback_forms_bundle(d)
    g = ctx.g
    results: dict[str, Scalar] = {}
    if method in (METHOD_CHERN_QUOTIENT, METHOD_BOTH):
        cls = total_segre(expr, ctx, g).graded_part(g)
        results[METHOD_CHERN_QUOTIENT] = ctx.integrate(cls)
    if method in (METHOD_CH_PARTITION, METHOD_BOTH):
        pieces = [chern_character_graded(dual(expr), ctx, j, g) for j in range(g + 1)]
        cls = segre_via_characters(pieces, g)
        results[METHOD_CH_PARTITION] = ctx.integrate(cls)
    if len(results) == 2:
        a = results[METHOD_CHERN_QUOTIENT]
        b = results[METHOD_CH_PARTITION]
        if a != b:
            raise InternalInconsistencyError(
                f"degree routes disagree at (d, n) = ({d}, {n}): "
                f"chern_quotient gives {a}, ch_partition gives {b}"
            )
    value = next(iter(results.values()))
    return _require_integer(value, f"degree at (d, n) = ({d}, {n})")


@dataclass(frozen=True)
class LpbInvariants:
    """Numerical invariants of a linear pullback component.

    ``bundle_rank`` is the rank (d+1)(d+3) of the pulled-back-forms bundle,
    ``grassmannian_dim`` is g = 3(n-2), and ``dimension`` is the component
    dimension g + (d+1)(d+3) - 1 inside the projectivized form space.
    """

    d: int
    n: int
    bundle_rank: int
    grassmannian_dim: int
    dimension: int


def lpb_invariants(d: int, n: int) -> LpbInvariants:
    """Rank, Grassmannian dimension and component dimension, by substitution."""
    if d < 0:
        raise ValueError("foliation degree must be nonnegative")
    if n < 3:
        raise ValueError("ambient projective dimension must be at least 3")
    rank = (d + 1) * (d + 3)
    g = 3 * (n - 2)
    return LpbInvariants(d=d, n=n, bundle_rank=rank, grassmannian_dim=g, dimension=g + rank - 1)


def virtual_rank_check(d: int, n: int) -> int:
    """Virtual rank of the pulled-back-forms bundle, from its root sets."""
    ctx = GrassContext(3, n + 1)
    return chern_roots(pullback_forms_bundle(d), ctx).virtual_rank


def closed_form(n: int, degree_fn: Callable[[int], int] | None = None) -> UniPoly:
    """The degree of the linear pullback component as a polynomial in d.

    Interpolates ``degree_fn`` (by default the direct Segre integral) at the
    3g+1 nodes d = 2 .. 3g+2, then verifies the interpolant at the held-out
    node d = 3g+3.  A verification mismatch means the degree-3g bound
    failed, i.e. a bug, and raises :class:`InternalInconsistencyError`.

    ``degree_fn`` exists so a caller can route the node evaluations through
    a cache; it must behave exactly like ``degree_lpb(d, n)``.
    """
    if n < 3:
        raise ValueError("ambient projective dimension must be at least 3")
    if degree_fn is None:
        degree_fn = lambda d: degree_lpb(d, n)
    g = 3 * (n - 2)
    bound = 3 * g
    nodes = range(2, bound + 3)
    poly = lagrange_interpolate([(d, degree_fn(d)) for d in nodes])
    probe = bound + 3
    direct = degree_fn(probe)
    if poly(probe) != direct:
        raise InternalInconsistencyError(
            f"interpolated degree polynomial for n = {n} fails at d = {probe}: "
            f"polynomial gives {poly(probe)}, direct evaluation gives {direct}"
        )
    return poly


# The two published closed forms.  For n = 3:
#   (20/27) * C(d+4, 5) * (d^2 + 6d + 11) * (d^2 + 2d + 3)
# For n = 4, with the degree-12 cofactor transcribed verbatim (descending):
#   (1/839808) * (d+4)!/(d-1)! * P(d) * (2 + d)
_N4_COFACTOR_DESC = (
    8,
    192,
    2176,
    15360,
    75090,
    267552,
    711859,
    1423716,
    2119892,
    2279136,
    1662291,
    730188,
    125388,
)


def _falling_factorial_5(d: Scalar) -> Scalar:
    """(d+4)(d+3)(d+2)(d+1)d, the polynomial form of (d+4)!/(d-1)!."""
    out = 1
    for i in range(5):
        out = out * (d + i)
    return out


def reference_formula(n: int, d: int) -> int:
    """Exact evaluation of the published closed form for n in {3, 4}.

    For n = 4 the published display quotients factorials, so d >= 1 is
    required there; n = 3 accepts any d >= 0.
    """
    if n == 3:
        if d < 0:
            raise ValueError("foliation degree must be nonnegative")
        value = Fraction(20, 27) * comb(d + 4, 5) * (d * d + 6 * d + 11) * (d * d + 2 * d + 3)
    elif n == 4:
        if d < 1:
            raise ValueError("the published n = 4 form divides by (d-1)!, so d >= 1")
        cofactor = 0
        for c in _N4_COFACTOR_DESC:
            cofactor = cofactor * d + c
        value = Fraction(_falling_factorial_5(d) * cofactor * (2 + d), 839808)
    else:
        raise ValueError("published closed forms exist only for n = 3 and n = 4")
    if value.denominator != 1:
        raise InternalInconsistencyError(f"published form at (n, d) = ({n}, {d}) is not an integer: {value}")
    return int(value)


def reference_polynomial(n: int) -> UniPoly:
    """Symbolic expansion of the published closed form as a polynomial in d."""
    x = UniPoly.variable()
    falling = UniPoly.constant(1)
    for i in range(5):
        falling = falling * (x + UniPoly.constant(i))
    if n == 3:
        quartics = UniPoly((11, 6, 1)) * UniPoly((3, 2, 1))
        return falling * quartics * Fraction(20, 27 * 120)
    if n == 4:
        cofactor = UniPoly(tuple(reversed(_N4_COFACTOR_DESC)))
        return falling * cofactor * UniPoly((2, 1)) * Fraction(1, 839808)
    raise ValueError("published closed forms exist only for n = 3 and n = 4")
