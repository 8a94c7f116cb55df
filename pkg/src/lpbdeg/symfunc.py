"""Integer partitions and the character-sum expression for Segre classes.

The degree-k Segre class of a bundle F can be written as a weighted sum over
partitions of k of products of graded Chern character pieces of the dual
bundle:

    s_k(F) = sum over partitions lam of k of
             w(lam) * ch_{lam_1}(F*) * ch_{lam_2}(F*) * ...

with the purely combinatorial weight computed by :func:`weight_w`.  This
route shares nothing with the Chern class quotient route beyond the root
data, which makes it a genuine cross-check of the engine.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .polyring import TruncatedPoly


@dataclass(frozen=True)
class Partition:
    """A partition as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter[int]:
        """Counter mapping each part value to how often it occurs."""
        return Counter(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _descending_parts(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _descending_parts(total - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[Partition, ...]:
    """All partitions of ``k`` in reverse lexicographic order.

    For k = 3 the order is (3), (2, 1), (1, 1, 1).  The result is a cached
    immutable tuple, so repeated calls are free and safe to share.
    """
    if k < 0:
        raise ValueError("cannot partition a negative integer")
    return tuple(Partition(parts) for parts in _descending_parts(k, k))


def weight_w(lam: Partition) -> Fraction:
    """The weight attached to a partition in the Segre character sum.

    With m_i the multiplicity of the part i,

        w(lam) = prod over distinct parts i of  (i!)^{m_i} / (i^{m_i} m_i!).

    Checked values: w(2) = 1, w(1,1) = 1/2, w(3) = 2, w(2,1) = 1,
    w(1,1,1) = 1/6.
    """
    num = 1
    den = 1
    for part, mult in lam.multiplicities().items():
        num *= factorial(part) ** mult
        den *= part**mult * factorial(mult)
    return Fraction(num, den)


def segre_via_characters(graded_characters: Sequence[TruncatedPoly], k: int) -> TruncatedPoly:
    """Degree-k Segre class from graded Chern characters of the dual bundle.

    ``graded_characters[j]`` must be the degree-j graded piece of ch(F*) for
    every j up to k.  The pieces must all live in the same truncated ring and
    be homogeneous of their index.
    """
    if k < 0:
        raise ValueError("negative Segre degree")
    if len(graded_characters) <= k:
        raise ValueError(f"need graded characters up to degree {k}")
    head = graded_characters[0]
    for j, piece in enumerate(graded_characters[: k + 1]):
        if piece.nvars != head.nvars or piece.cap != head.cap:
            raise ValueError("graded characters live in different rings")
        if not piece.is_homogeneous(j):
            raise ValueError(f"graded piece {j} is not homogeneous of degree {j}")
    if k == 0:
        return TruncatedPoly.one(head.nvars, head.cap)
    total = TruncatedPoly.zero(head.nvars, head.cap)
    for lam in partitions(k):
        prod = TruncatedPoly.one(head.nvars, head.cap)
        for part in lam:
            prod = prod * graded_characters[part]
        total = total + prod.scale(weight_w(lam))
    return total
