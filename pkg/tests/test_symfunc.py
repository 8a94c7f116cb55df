from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpbdeg.polyring import LinearForm, TruncatedPoly, inverse_unit_series, product_shifted_linear
from lpbdeg.symfunc import Partition, partitions, segre_via_characters, weight_w


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((0,))
    with pytest.raises(ValueError):
        Partition((1, 2))
    p = Partition((3, 1, 1))
    assert p.weight == 5
    assert len(p) == 3
    assert list(p) == [3, 1, 1]
    assert p.multiplicities() == {3: 1, 1: 2}


def test_partitions_enumeration():
    assert partitions(0) == (Partition(()),)
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions(6)) == 11
    assert all(p.weight == 6 for p in partitions(6))
    with pytest.raises(ValueError):
        partitions(-1)


def test_partitions_cached_identity():
    assert partitions(4) is partitions(4)


def test_weight_values():
    # hand-derived from the multiplicity formula
    assert weight_w(Partition((2,))) == 1
    assert weight_w(Partition((1, 1))) == Fraction(1, 2)
    assert weight_w(Partition((3,))) == 2
    assert weight_w(Partition((2, 1))) == 1
    assert weight_w(Partition((1, 1, 1))) == Fraction(1, 6)
    assert weight_w(Partition(())) == 1


def _graded_characters_of_dual(forms, cap, upto):
    """ch pieces of the dual of the bundle with the given roots."""
    pieces = []
    for j in range(upto + 1):
        acc = TruncatedPoly.zero(3, cap)
        for f in forms:
            acc = acc + TruncatedPoly.linear(-f, cap) ** j
        pieces.append(acc.scale(Fraction(1, factorial(j))))
    return pieces


small = st.integers(min_value=-2, max_value=2)


@given(
    st.lists(st.tuples(small, small, small), min_size=1, max_size=4),
    st.integers(0, 3),
)
def test_character_sum_matches_inverted_chern_series(form_coeffs, k):
    # independent oracle: the Segre series as the inverse of the total
    # Chern class, versus the partition-weighted character sum
    forms = [LinearForm(c) for c in form_coeffs]
    total_chern = product_shifted_linear(forms, k, nvars=3)
    expected = inverse_unit_series(total_chern).graded_part(k)
    pieces = _graded_characters_of_dual(forms, k, k)
    assert segre_via_characters(pieces, k) == expected


def test_character_sum_validation():
    one = TruncatedPoly.one(3, 2)
    with pytest.raises(ValueError):
        segre_via_characters([one], 1)
    inhomogeneous = TruncatedPoly(3, 2, {(1, 0, 0): 1, (0, 0, 0): 1})
    with pytest.raises(ValueError):
        segre_via_characters([one, inhomogeneous], 1)
    other_ring = TruncatedPoly.one(3, 3)
    with pytest.raises(ValueError):
        segre_via_characters([one, other_ring], 1)
    with pytest.raises(ValueError):
        segre_via_characters([one], -1)


def test_character_sum_degree_zero():
    one = TruncatedPoly.one(3, 2)
    assert segre_via_characters([one.scale(5)], 0) == one
