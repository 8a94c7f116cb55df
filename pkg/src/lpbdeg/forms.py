"""Exact projective differential 1-forms and linear pullback.

A projective 1-form of foliation degree d on P^n is ``sum A_i dZ_i`` with
each A_i homogeneous of degree d+1 and the radial contraction
``sum A_i Z_i`` identically zero.  Polynomials here are sparse dicts from
exponent tuples over Z_0..Z_n to integer or Fraction coefficients, exact
and untruncated (degrees stay small).

:class:`ProjectiveOneForm` stores the coefficient vector and enforces
homogeneity but deliberately not the contraction identity, so that
non-members can be constructed and tested; membership is the statement
``contract_radial(form) == {}``.

Linear pullback along a rank-3 matrix F sends a plane form to a form on
P^n, and :func:`recover` inverts that map exactly: it builds a one-sided
inverse of F from an invertible column triple, pulls the candidate back and
accepts only on exact agreement.  All hot paths stay in integer arithmetic;
rationals appear only in the final rescale.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .exact import Scalar, kernel_basis, matrix_rank
from .polyring import exponents_of_degree

Exponent = tuple[int, ...]
Poly = dict[Exponent, Scalar]


def _norm_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def poly_sub(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def poly_scale(p: Poly, c: Scalar) -> Poly:
    if c == 0:
        return {}
    return {e: _norm_scalar(v * c) for e, v in p.items()}


def poly_mul(p: Poly, q: Poly) -> Poly:
    if len(q) < len(p):
        p, q = q, p
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def poly_diff(p: Poly, var: int) -> Poly:
    """Partial derivative with respect to variable ``var``."""
    out: Poly = {}
    for e, c in p.items():
        k = e[var]
        if k:
            out[e[:var] + (k - 1,) + e[var + 1 :]] = c * k
    return out


def poly_mul_var(p: Poly, var: int) -> Poly:
    """Multiply by the single variable ``Z_var``."""
    return {e[:var] + (e[var] + 1,) + e[var + 1 :]: c for e, c in p.items()}


def poly_is_homogeneous(p: Poly, degree: int) -> bool:
    return all(sum(e) == degree for e in p)


def substitute_linear(p: Poly, rows: Sequence[Sequence[Scalar]], nvars_out: int) -> Poly:
    """Substitute a linear form for each variable of ``p``.

    ``rows[i]`` holds the coefficients, over the output variables, of the
    form replacing variable i.  Monomial images are built incrementally and
    memoized, so each distinct exponent costs one multiplication by a
    linear polynomial.
    """
    if any(len(row) != nvars_out for row in rows):
        raise ValueError("substitution rows must have nvars_out entries")
    lin: list[Poly] = []
    for row in rows:
        form: Poly = {}
        for j, c in enumerate(row):
            if c != 0:
                form[tuple(1 if t == j else 0 for t in range(nvars_out))] = c
        lin.append(form)
    cache: dict[Exponent, Poly] = {(0,) * len(rows): {(0,) * nvars_out: 1}}

    def image(e: Exponent) -> Poly:
        known = cache.get(e)
        if known is not None:
            return known
        i = next(idx for idx, v in enumerate(e) if v > 0)
        prev = e[:i] + (e[i] - 1,) + e[i + 1 :]
        value = poly_mul(image(prev), lin[i])
        cache[e] = value
        return value

    out: Poly = {}
    for e, c in p.items():
        if len(e) != len(rows):
            raise ValueError("polynomial arity does not match the substitution")
        for e2, c2 in image(e).items():
            v = out.get(e2, 0) + c * c2
            if v:
                out[e2] = v
            elif e2 in out:
                del out[e2]
    return out


@dataclass
class ProjectiveOneForm:
    """Coefficient vector ``(A_0, ..., A_n)`` of ``sum A_i dZ_i``.

    ``n`` is the ambient projective dimension and d the foliation degree,
    so each A_i is homogeneous of degree d+1 in the n+1 variables.  The
    radial-contraction identity is not enforced here; use
    :func:`contract_radial` to test membership in the form space.
    """

    n: int
    d: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("ambient projective dimension must be at least 2")
        if self.d < 0:
            raise ValueError("foliation degree must be nonnegative")
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficient polynomials, got {len(self.coeffs)}")
        clean = []
        for a in self.coeffs:
            poly: Poly = {}
            for e, c in a.items():
                key = tuple(e)
                if len(key) != self.n + 1 or any(k < 0 for k in key):
                    raise ValueError(f"bad exponent {key} for ambient dimension {self.n}")
                if c != 0:
                    poly[key] = c
            if not poly_is_homogeneous(poly, self.d + 1):
                raise ValueError(f"coefficients must be homogeneous of degree {self.d + 1}")
            clean.append(poly)
        self.coeffs = tuple(clean)

    @classmethod
    def zero(cls, n: int, d: int) -> ProjectiveOneForm:
        return cls(n, d, tuple({} for _ in range(n + 1)))

    @property
    def is_zero(self) -> bool:
        return all(not a for a in self.coeffs)

    def scale(self, c: Scalar) -> ProjectiveOneForm:
        return ProjectiveOneForm(self.n, self.d, tuple(poly_scale(a, c) for a in self.coeffs))

    def __add__(self, other: ProjectiveOneForm) -> ProjectiveOneForm:
        if not isinstance(other, ProjectiveOneForm):
            return NotImplemented
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError("forms live in different spaces")
        return ProjectiveOneForm(
            self.n, self.d, tuple(poly_add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )


def contract_radial(form: ProjectiveOneForm) -> Poly:
    """The radial contraction ``sum A_i Z_i``, zero exactly on form-space members."""
    out: Poly = {}
    for i, a in enumerate(form.coeffs):
        out = poly_add(out, poly_mul_var(a, i))
    return out


def integrability_defect(form: ProjectiveOneForm) -> dict[tuple[int, int, int], Poly]:
    """The quadratic integrability obstructions, indexed by triples i < j < k.

    For each triple the defect is
    ``A_i (d_j A_k - d_k A_j) + A_j (d_k A_i - d_i A_k) + A_k (d_i A_j - d_j A_i)``
    with d_j the partial derivative in Z_j; the form is integrable exactly
    when every defect is the zero polynomial.
    """
    nv = form.n + 1
    partial = [[poly_diff(form.coeffs[t], v) for v in range(nv)] for t in range(nv)]
    out: dict[tuple[int, int, int], Poly] = {}
    for i, j, k in combinations(range(nv), 3):
        term = poly_mul(form.coeffs[i], poly_sub(partial[k][j], partial[j][k]))
        term = poly_add(term, poly_mul(form.coeffs[j], poly_sub(partial[i][k], partial[k][i])))
        term = poly_add(term, poly_mul(form.coeffs[k], poly_sub(partial[j][i], partial[i][j])))
        out[(i, j, k)] = term
    return out


def is_integrable(form: ProjectiveOneForm) -> bool:
    return all(not p for p in integrability_defect(form).values())


@dataclass(frozen=True)
class LinearProjection:
    """A linear projection P^n -> P^2 given by a full-rank 3 x (n+1) matrix.

    Row r holds the coefficients of the linear form F_r; the projection is
    ``[F_0 : F_1 : F_2]``.  Construction fails unless the rank is exactly 3.
    """

    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(_norm_scalar(Fraction(c)) for c in row) for row in self.rows)
        if len(rows) != 3:
            raise ValueError("a projection to the plane needs exactly 3 rows")
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValueError("projection rows have unequal lengths")
        width = widths.pop()
        if width < 3:
            raise ValueError("ambient projective dimension must be at least 2")
        if matrix_rank(rows) != 3:
            raise ValueError("projection matrix must have rank exactly 3")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1

    @classmethod
    def coordinate(cls, n: int) -> LinearProjection:
        """The projection onto the first three coordinates."""
        return cls(tuple(tuple(1 if j == i else 0 for j in range(n + 1)) for i in range(3)))


def pullback_linear(proj: LinearProjection, form: ProjectiveOneForm) -> ProjectiveOneForm:
    """Pull a plane 1-form back along the linear projection.

    With ``mu = sum_i B_i(F) dF_i`` expanded in the ambient coordinates, the
    j-th output coefficient is ``sum_i F[i][j] * (B_i o F)``.  The input
    must be a plane form with zero radial contraction; the output then has
    zero contraction and zero integrability defects, which the test suite
    checks exhaustively.
    """
    if form.n != 2:
        raise ValueError("pullback source must be a plane form (n = 2)")
    if contract_radial(form):
        raise ValueError("pullback source must have zero radial contraction")
    nv = proj.n + 1
    composed = [substitute_linear(b, proj.rows, nv) for b in form.coeffs]
    coeffs = []
    for j in range(nv):
        a: Poly = {}
        for i in range(3):
            f = proj.rows[i][j]
            if f != 0:
                a = poly_add(a, poly_scale(composed[i], f))
        coeffs.append(a)
    return ProjectiveOneForm(proj.n, form.d, tuple(coeffs))


def dimension_vdn(n: int, d: int) -> int:
    """Dimension of the space of degree-d projective 1-forms on P^n.

    The contraction map from (n+1) copies of the degree-(d+1) monomial
    space onto the degree-(d+2) monomial space is surjective, so the
    dimension is ``(n+1)*C(n+d+1, n) - C(n+d+2, n)``.
    """
    if n < 2:
        raise ValueError("ambient projective dimension must be at least 2")
    if d < 0:
        raise ValueError("foliation degree must be nonnegative")
    return (n + 1) * comb(n + d + 1, n) - comb(n + d + 2, n)


@lru_cache(maxsize=None)
def form_space_basis(n: int, d: int) -> tuple[ProjectiveOneForm, ...]:
    """A basis of the form space, from the kernel of the contraction matrix.

    Columns of the matrix are ordered by coefficient index i and then by
    the monomial order of :func:`exponents_of_degree`; the basis is the
    normalized kernel basis in that layout, so it is deterministic.  The
    result is cached; treat the returned forms as read-only.
    """
    nv = n + 1
    monos = list(exponents_of_degree(nv, d + 1))
    index = {}
    for r, e in enumerate(exponents_of_degree(nv, d + 2)):
        index[e] = r
    nrows = len(index)
    ncols = nv * len(monos)
    matrix = [[0] * ncols for _ in range(nrows)]
    for i in range(nv):
        for m, e in enumerate(monos):
            row = index[e[:i] + (e[i] + 1,) + e[i + 1 :]]
            matrix[row][i * len(monos) + m] = 1
    basis = []
    for vec in kernel_basis(matrix):
        coeffs = []
        for i in range(nv):
            poly: Poly = {}
            for m, e in enumerate(monos):
                c = vec[i * len(monos) + m]
                if c:
                    poly[e] = _norm_scalar(c)
            coeffs.append(poly)
        basis.append(ProjectiveOneForm(n, d, tuple(coeffs)))
    assert len(basis) == dimension_vdn(n, d)
    return tuple(basis)


def random_form(n: int, d: int, seed: int) -> ProjectiveOneForm:
    """Deterministic pseudo-random element of the form space.

    Combines the cached kernel basis with independent uniform integer
    coefficients in [-9, 9] drawn from ``random.Random(seed)``; the same
    (n, d, seed) always yields the same form, and the radial contraction of
    the result is identically zero.
    """
    basis = form_space_basis(n, d)
    rng = random.Random(seed)
    weights = [rng.randint(-9, 9) for _ in basis]
    coeffs: list[Poly] = [{} for _ in range(n + 1)]
    for w, b in zip(weights, basis):
        if w == 0:
            continue
        for i in range(n + 1):
            coeffs[i] = poly_add(coeffs[i], poly_scale(b.coeffs[i], w))
    return ProjectiveOneForm(n, d, tuple(coeffs))


def random_projection(n: int, seed: int) -> LinearProjection:
    """Deterministic pseudo-random full-rank projection with entries in [-9, 9]."""
    rng = random.Random(seed)
    for _ in range(1000):
        rows = tuple(tuple(rng.randint(-9, 9) for _ in range(n + 1)) for _ in range(3))
        if matrix_rank(rows) == 3:
            return LinearProjection(rows)
    raise RuntimeError("failed to sample a full-rank projection")


def _det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate3(m: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    """Adjugate of a 3 x 3 matrix: ``m @ adj = det * identity``."""
    cof = [
        [
            m[1][1] * m[2][2] - m[1][2] * m[2][1],
            -(m[1][0] * m[2][2] - m[1][2] * m[2][0]),
            m[1][0] * m[2][1] - m[1][1] * m[2][0],
        ],
        [
            -(m[0][1] * m[2][2] - m[0][2] * m[2][1]),
            m[0][0] * m[2][2] - m[0][2] * m[2][0],
            -(m[0][0] * m[2][1] - m[0][1] * m[2][0]),
        ],
        [
            m[0][1] * m[1][2] - m[0][2] * m[1][1],
            -(m[0][0] * m[1][2] - m[0][2] * m[1][0]),
            m[0][0] * m[1][1] - m[0][1] * m[1][0],
        ],
    ]
    return [[cof[j][i] for j in range(3)] for i in range(3)]


def recover(proj: LinearProjection, mu: ProjectiveOneForm) -> ProjectiveOneForm | None:
    """Invert the linear pullback: find the plane form with the given image.

    Chooses the first column triple of the projection matrix with nonzero
    determinant; the adjugate of that 3 x 3 block gives a section G of the
    projection with ``F o G = det * identity``, and pulling mu back along G
    yields ``det^(d+2)`` times the only possible plane source.  The
    candidate is accepted only if it has zero radial contraction and its
    pullback reproduces mu exactly; otherwise the input was not a pullback
    and the result is ``None``.
    """
    if mu.n != proj.n:
        raise ValueError("form and projection have different ambient dimensions")
    triple = None
    det: Scalar = 0
    for cols in combinations(range(proj.n + 1), 3):
        block = [[proj.rows[r][c] for c in cols] for r in range(3)]
        det = _det3(block)
        if det != 0:
            triple = cols
            break
    assert triple is not None  # rank 3 guarantees an invertible column triple
    block = [[proj.rows[r][c] for c in triple] for r in range(3)]
    adj = _adjugate3(block)
    # restrict each relevant coefficient of mu to the chosen variables,
    # then substitute the adjugate rows; variables outside the triple are 0
    raw: list[Poly] = [{} for _ in range(3)]
    for t in range(3):
        restricted: Poly = {}
        for e, c in mu.coeffs[triple[t]].items():
            if any(e[v] for v in range(len(e)) if v not in triple):
                continue
            restricted[tuple(e[v] for v in triple)] = c
        if not restricted:
            continue
        composed = substitute_linear(restricted, adj, 3)
        for i in range(3):
            w = adj[t][i]
            if w != 0:
                raw[i] = poly_add(raw[i], poly_scale(composed, w))
    raw_form = ProjectiveOneForm(2, mu.d, tuple(raw))
    if contract_radial(raw_form):
        return None
    factor = det ** (mu.d + 2)
    if pullback_linear(proj, raw_form).coeffs != mu.scale(factor).coeffs:
        return None
    return raw_form.scale(Fraction(1) / factor)
