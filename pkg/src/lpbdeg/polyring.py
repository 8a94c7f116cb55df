"""Truncated multivariate polynomials for characteristic class arithmetic.

A :class:`TruncatedPoly` lives in the quotient of ``Q[x_1..x_nvars]`` by the
ideal of everything of total degree above ``cap``.  Terms are stored sparsely
as a dict from exponent tuples to nonzero scalars; any product silently drops
terms beyond the cap, which is exactly the right semantics for working on a
variety whose cohomology vanishes above its dimension.

The exponent order used for display and serialization is graded
lexicographic: lower total degree first, ties broken by the exponent tuple.
Arithmetic itself is order-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .exact import Scalar

Exponent = tuple[int, ...]


def exponents_of_degree(nvars: int, degree: int) -> Iterator[Exponent]:
    """All exponent tuples with ``nvars`` entries summing to ``degree``.

    The order is deterministic (first entry descending, then recursively),
    which downstream code relies on for reproducible matrix layouts.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in exponents_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


@dataclass(frozen=True, order=True)
class LinearForm:
    """Integer linear form ``sum coeffs[i] * x_i``, used as a Chern root."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("LinearForm coefficients must be integers")

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __neg__(self) -> LinearForm:
        return LinearForm(tuple(-c for c in self.coeffs))

    def __add__(self, other: LinearForm) -> LinearForm:
        if not isinstance(other, LinearForm):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("linear forms over different variable counts")
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


class TruncatedPoly:
    """Sparse polynomial in ``nvars`` variables, truncated above ``cap``."""

    __slots__ = ("nvars", "cap", "terms")

    def __init__(self, nvars: int, cap: int, terms: Mapping[Exponent, Scalar] | None = None) -> None:
        if nvars < 1:
            raise ValueError("need at least one variable")
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        clean: dict[Exponent, Scalar] = {}
        for expo, c in (terms or {}).items():
            e = tuple(expo)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            if c == 0 or sum(e) > cap:
                continue
            clean[e] = clean.get(e, 0) + c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c != 0})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedPoly is immutable")

    @classmethod
    def _raw(cls, nvars: int, cap: int, terms: dict[Exponent, Scalar]) -> TruncatedPoly:
        """Trusted constructor: ``terms`` is already clean and owned."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "cap", cap)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, nvars: int, cap: int) -> TruncatedPoly:
        return cls._raw(nvars, cap, {})

    @classmethod
    def one(cls, nvars: int, cap: int) -> TruncatedPoly:
        return cls.constant(nvars, cap, 1)

    @classmethod
    def constant(cls, nvars: int, cap: int, c: Scalar) -> TruncatedPoly:
        if c == 0:
            return cls.zero(nvars, cap)
        return cls._raw(nvars, cap, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, cap: int, index: int) -> TruncatedPoly:
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        if cap < 1:
            return cls.zero(nvars, cap)
        expo = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, cap, {expo: 1})

    @classmethod
    def linear(cls, form: LinearForm, cap: int) -> TruncatedPoly:
        """The linear form itself as a degree-1 polynomial."""
        terms: dict[Exponent, Scalar] = {}
        if cap >= 1:
            for i, c in enumerate(form.coeffs):
                if c:
                    expo = tuple(1 if j == i else 0 for j in range(form.nvars))
                    terms[expo] = c
        return cls._raw(form.nvars, cap, terms)

    def _check_compatible(self, other: TruncatedPoly) -> None:
        if self.nvars != other.nvars or self.cap != other.cap:
            raise ValueError("operands live in different truncated rings")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, expo: Sequence[int]) -> Scalar:
        """Coefficient of the given exponent tuple (0 when absent)."""
        e = tuple(expo)
        if len(e) != self.nvars:
            raise ValueError(f"exponent {e} does not have {self.nvars} entries")
        return self.terms.get(e, 0)

    def graded_part(self, degree: int) -> TruncatedPoly:
        """The homogeneous piece of the given total degree."""
        if not 0 <= degree <= self.cap:
            raise ValueError("degree outside [0, cap]")
        part = {e: c for e, c in self.terms.items() if sum(e) == degree}
        return TruncatedPoly._raw(self.nvars, self.cap, part)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def is_symmetric(self) -> bool:
        """True when invariant under every permutation of the variables.

        Checking adjacent transpositions suffices since they generate the
        symmetric group.
        """
        for i in range(self.nvars - 1):
            for e, c in self.terms.items():
                if e[i] != e[i + 1]:
                    swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
                    if self.terms.get(swapped, 0) != c:
                        return False
        return True

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        """Terms in graded lexicographic order, the serialization order."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.cap == other.cap and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.cap, tuple(self.sorted_terms())))

    def __add__(self, other: TruncatedPoly) -> TruncatedPoly:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return TruncatedPoly._raw(self.nvars, self.cap, out)

    def __neg__(self) -> TruncatedPoly:
        return TruncatedPoly._raw(self.nvars, self.cap, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: TruncatedPoly) -> TruncatedPoly:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> TruncatedPoly:
        if c == 0:
            return TruncatedPoly.zero(self.nvars, self.cap)
        return TruncatedPoly._raw(self.nvars, self.cap, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: TruncatedPoly | Scalar) -> TruncatedPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        big = [(e, sum(e), c) for e, c in b.items()]
        out: dict[Exponent, Scalar] = {}
        cap = self.cap
        for e1, c1 in a.items():
            d1 = sum(e1)
            for e2, d2, c2 in big:
                if d1 + d2 > cap:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return TruncatedPoly._raw(self.nvars, self.cap, out)

    def __rmul__(self, other: Scalar) -> TruncatedPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exp: int) -> TruncatedPoly:
        if exp < 0:
            raise ValueError("negative power in a truncated ring")
        out = TruncatedPoly.one(self.nvars, self.cap)
        base = self
        while exp:
            if exp & 1:
                out = out * base
            base = base * base
            exp >>= 1
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return f"TruncatedPoly({self.nvars}, {self.cap}, 0)"
        body = " + ".join(f"{c}*x^{list(e)}" for e, c in self.sorted_terms())
        return f"TruncatedPoly({self.nvars}, {self.cap}, {body})"


def _mul_shifted_linear(terms: dict[Exponent, Scalar], form: LinearForm, cap: int) -> dict[Exponent, Scalar]:
    """Multiply a term dict by ``1 + form``, truncating above ``cap``."""
    out = dict(terms)
    for e, c in terms.items():
        if sum(e) >= cap:
            continue
        for i, a in enumerate(form.coeffs):
            if a == 0:
                continue
            e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
            v = out.get(e2, 0) + c * a
            if v:
                out[e2] = v
            elif e2 in out:
                del out[e2]
    return out


def product_shifted_linear(
    factors: Iterable[LinearForm], cap: int, nvars: int | None = None
) -> TruncatedPoly:
    """The truncated product of ``(1 + form)`` over the given linear forms.

    This is the total Chern class of a bundle whose roots are the forms.  An
    empty factor list yields 1, in which case ``nvars`` must be supplied.
    """
    forms = list(factors)
    if forms:
        inferred = forms[0].nvars
        if nvars is not None and nvars != inferred:
            raise ValueError("nvars disagrees with the factors")
        nvars = inferred
        if any(f.nvars != nvars for f in forms):
            raise ValueError("factors over different variable counts")
    elif nvars is None:
        raise ValueError("empty product needs an explicit nvars")
    terms: dict[Exponent, Scalar] = {(0,) * nvars: 1}
    for form in forms:
        terms = _mul_shifted_linear(terms, form, cap)
    return TruncatedPoly._raw(nvars, cap, terms)


def inverse_unit_series(p: TruncatedPoly) -> TruncatedPoly:
    """Multiplicative inverse of a series with constant term 1.

    Writing ``p = 1 + p_1 + p_2 + ...`` by total degree, the inverse ``q``
    satisfies the grade-by-grade recurrence
    ``q_k = -(p_1 q_{k-1} + ... + p_k q_0)``, which is what gets evaluated
    here.  Raises ``ValueError`` unless the constant term is exactly 1.
    """
    if p.constant_term() != 1:
        raise ValueError("inverse_unit_series needs constant term 1")
    nvars, cap = p.nvars, p.cap
    p_grades: list[dict[Exponent, Scalar]] = [dict() for _ in range(cap + 1)]
    for e, c in p.terms.items():
        p_grades[sum(e)][e] = c
    q_grades: list[dict[Exponent, Scalar]] = [{(0,) * nvars: 1}]
    for k in range(1, cap + 1):
        acc: dict[Exponent, Scalar] = {}
        for j in range(1, k + 1):
            pj = p_grades[j]
            if not pj:
                continue
            qk = q_grades[k - j]
            for e1, c1 in pj.items():
                for e2, c2 in qk.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    v = acc.get(e, 0) + c1 * c2
                    if v:
                        acc[e] = v
                    elif e in acc:
                        del acc[e]
        q_grades.append({e: -c for e, c in acc.items()})
    out: dict[Exponent, Scalar] = {}
    for grade in q_grades:
        out.update(grade)
    return TruncatedPoly._raw(nvars, cap, out)


def elementary_symmetric(nvars: int, cap: int, index: int) -> TruncatedPoly:
    """The elementary symmetric polynomial ``e_index`` in the ring variables."""
    if index < 0:
        raise ValueError("negative elementary symmetric index")
    if index == 0:
        return TruncatedPoly.one(nvars, cap)
    if index > nvars or index > cap:
        return TruncatedPoly.zero(nvars, cap)
    terms: dict[Exponent, Scalar] = {}
    for subset in combinations(range(nvars), index):
        expo = tuple(1 if i in subset else 0 for i in range(nvars))
        terms[expo] = 1
    return TruncatedPoly._raw(nvars, cap, terms)


def to_elementary(p: TruncatedPoly) -> dict[Exponent, Scalar]:
    """Rewrite a symmetric polynomial in the elementary symmetric generators.

    Returns a dict mapping multiplicity tuples ``(m_1, ..., m_nvars)`` to
    coefficients, meaning ``sum c * e_1^{m_1} * ... * e_nvars^{m_nvars}``.
    The classical leading-term algorithm is used degree by degree: the
    lexicographically largest exponent of a symmetric homogeneous polynomial
    is weakly decreasing, and subtracting the matching product of elementary
    symmetric polynomials strictly lowers it.  Raises ``ValueError`` when the
    input is not symmetric.
    """
    if not p.is_symmetric():
        raise ValueError("to_elementary needs a symmetric polynomial")
    k = p.nvars
    basis = [elementary_symmetric(k, p.cap, i) for i in range(k + 1)]
    out: dict[Exponent, Scalar] = {}
    for degree in range(p.cap + 1):
        h = {e: c for e, c in p.terms.items() if sum(e) == degree}
        while h:
            alpha = max(h)
            assert all(alpha[i] >= alpha[i + 1] for i in range(k - 1))
            mults = tuple(alpha[i] - alpha[i + 1] for i in range(k - 1)) + (alpha[-1],)
            c = h[alpha]
            out[mults] = out.get(mults, 0) + c
            prod = TruncatedPoly.one(k, p.cap)
            for i, m in enumerate(mults):
                if m:
                    prod = prod * basis[i + 1] ** m
            for e, pc in prod.terms.items():
                v = h.get(e, 0) - c * pc
                if v:
                    h[e] = v
                elif e in h:
                    del h[e]
    return {m: c for m, c in out.items() if c != 0}
