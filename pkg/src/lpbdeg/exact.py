"""Exact scalars, dense linear algebra, and univariate polynomials.

Scalars throughout the package are Python integers and
``fractions.Fraction`` values.  Fractions are arbitrary precision and always
normalized (lowest terms, positive denominator), so equality of scalars is
plain ``==`` and no tolerance is involved anywhere.

Matrices are sequences of equal-length rows.  Elimination uses exact pivots
and a fixed pivot-selection rule (first nonzero entry in column order), so
every routine here is deterministic for a fixed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction

UNIQUE = "unique"
UNDERDETERMINED = "underdetermined"
INCONSISTENT = "inconsistent"


def _to_matrix(rows: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    """Copy ``rows`` into a rectangular matrix of Fractions."""
    out = [[Fraction(x) for x in row] for row in rows]
    widths = {len(row) for row in out}
    if len(widths) > 1:
        raise ValueError("matrix rows have unequal lengths")
    return out


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` in place to reduced row echelon form.

    Returns the reduced rows together with the list of pivot columns, in
    increasing order.  Only the first ``ncols`` columns are eligible as
    pivots; trailing columns (an augmented right-hand side, say) are carried
    along passively.
    """
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        hit = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                hit = i
                break
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        lead = rows[r][col]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of solving ``A x = b`` exactly.

    ``status`` is one of ``"unique"``, ``"underdetermined"`` or
    ``"inconsistent"``.  ``vector`` holds one particular solution (with every
    free coordinate set to zero) whenever the system is consistent, and is
    ``None`` otherwise.
    """

    status: str
    vector: tuple[Fraction, ...] | None

    @property
    def is_consistent(self) -> bool:
        return self.status != INCONSISTENT


def solve_linear(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> LinearSolution:
    """Solve the linear system ``matrix @ x = rhs`` over the rationals."""
    rows = _to_matrix(matrix)
    if len(rows) != len(rhs):
        raise ValueError("right-hand side length does not match the row count")
    ncols = len(rows[0]) if rows else 0
    aug = [row + [Fraction(b)] for row, b in zip(rows, rhs)]
    if not aug:
        return LinearSolution(UNIQUE if ncols == 0 else UNDERDETERMINED, (Fraction(0),) * ncols)
    reduced, pivots = _rref(aug, ncols)
    for row in reduced:
        if row[-1] != 0 and all(x == 0 for x in row[:ncols]):
            return LinearSolution(INCONSISTENT, None)
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = reduced[i][-1]
    status = UNIQUE if len(pivots) == ncols else UNDERDETERMINED
    return LinearSolution(status, tuple(x))


def kernel_basis(matrix: Sequence[Sequence[Scalar]]) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel ``{x : matrix @ x = 0}``.

    The basis is normalized so that each vector has value 1 in one free
    column of the echelon form and 0 in every other free column; vectors are
    returned in increasing order of that free column.  An empty list means
    the kernel is trivial.
    """
    rows = _to_matrix(matrix)
    if not rows:
        raise ValueError("kernel_basis needs at least one row to fix the column count")
    ncols = len(rows[0])
    reduced, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -reduced[i][free]
        basis.append(tuple(v))
    return basis


def matrix_rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    """Rank of the matrix over the rationals."""
    rows = _to_matrix(matrix)
    if not rows:
        return 0
    _, pivots = _rref(rows, len(rows[0]))
    return len(pivots)


class UniPoly:
    """Univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of the i-th power; trailing zeros are
    stripped on construction, so the zero polynomial has an empty coefficient
    tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> UniPoly:
        return cls((c,))

    @classmethod
    def variable(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: UniPoly | Scalar) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other: Scalar) -> UniPoly:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exp: int) -> UniPoly:
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.constant(1)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"


def lagrange_interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> UniPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Uses Newton divided differences, which keeps the arithmetic exact and
    the work quadratic in the number of nodes.  Raises ``ValueError`` if two
    points share an abscissa.
    """
    if not points:
        return UniPoly()
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    table = list(ys)
    newton = [table[0]]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
        newton.append(table[j])
    poly = UniPoly()
    basis = UniPoly.constant(1)
    x = UniPoly.variable()
    for j in range(n):
        poly = poly + basis * newton[j]
        basis = basis * (x - UniPoly.constant(xs[j]))
    return poly
