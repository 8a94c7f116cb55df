"""Integration of symmetric classes over a Grassmannian G(k, m).

A degree-g symmetric polynomial in the k Chern roots of the dual
tautological subbundle, with g = k(m - k) the dimension of the
Grassmannian, integrates to a number.  The implementation uses the
alternant form of the Schubert-basis expansion: multiply the class by the
Vandermonde determinant ``prod_{i<j} (x_i - x_j)`` and read off the
coefficient of ``x_1^{m-1} x_2^{m-2} ... x_k^{m-k}``.  That coefficient is
the coefficient of the top Schubert class, i.e. the integral.

The normalization is pinned by the Pluecker degree of G(k, m) in its
Pluecker embedding, ``integrate(e_1^g)``, which must come out to the
classical values (1, 5 and 42 for 3-planes in dimensions 4, 5, 6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Scalar
from .polyring import Exponent, TruncatedPoly, elementary_symmetric


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian of k-dimensional subspaces of an m-dimensional space.

    ``k`` is the number of Chern root variables used by every class over
    this space; ``g`` is the dimension, which is also the truncation cap
    needed to integrate; ``box`` is the rectangular partition shape
    ``(m - k, ..., m - k)`` bounding all Schubert indices.
    """

    k: int
    m: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.m <= self.k:
            raise ValueError("need m > k >= 1 for a positive-dimensional ambient space")

    @property
    def g(self) -> int:
        return self.k * (self.m - self.k)

    @property
    def box(self) -> tuple[int, ...]:
        return (self.m - self.k,) * self.k

    def integrate(self, cls: TruncatedPoly) -> Scalar:
        """Integral over the Grassmannian of a degree-g symmetric class.

        The class must be symmetric in the k root variables and homogeneous
        of degree g (the zero polynomial counts as homogeneous of every
        degree and integrates to 0).
        """
        if cls.nvars != self.k:
            raise ValueError(f"class has {cls.nvars} variables, expected {self.k}")
        if not cls.is_homogeneous(self.g):
            raise ValueError(f"class is not homogeneous of degree {self.g}")
        if not cls.is_symmetric():
            raise ValueError("class is not symmetric in the root variables")
        k = self.k
        target = tuple(self.m - 1 - i for i in range(k))
        # expand cls * Vandermonde and accumulate only the target coefficient
        vandermonde: dict[Exponent, int] = {(0,) * k: 1}
        for i in range(k):
            for j in range(i + 1, k):
                nxt: dict[Exponent, int] = {}
                for e, c in vandermonde.items():
                    for idx, sign in ((i, 1), (j, -1)):
                        e2 = e[:idx] + (e[idx] + 1,) + e[idx + 1 :]
                        v = nxt.get(e2, 0) + sign * c
                        if v:
                            nxt[e2] = v
                        elif e2 in nxt:
                            del nxt[e2]
                vandermonde = nxt
        total: Scalar = 0
        for e, c in cls.terms.items():
            rest = tuple(t - a for t, a in zip(target, e))
            if any(r < 0 for r in rest):
                continue
            total += c * vandermonde.get(rest, 0)
        return total

    def plucker_degree(self) -> int:
        """Degree of the Grassmannian in its Pluecker embedding.

        This integrates ``e_1^g`` and doubles as the calibration check for
        the integration normalization.
        """
        e1 = elementary_symmetric(self.k, self.g, 1)
        value = self.integrate(e1**self.g)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ArithmeticError("Pluecker degree came out non-integral")
            return int(value)
        return int(value)
