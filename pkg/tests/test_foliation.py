from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpbdeg.bundles import chern_roots
from lpbdeg.exact import UniPoly
from lpbdeg.foliation import (
    InternalInconsistencyError,
    METHOD_BOTH,
    METHOD_CH_PARTITION,
    METHOD_CHERN_QUOTIENT,
    closed_form,
    degree_lpb,
    lpb_invariants,
    pullback_forms_bundle,
    reference_formula,
    reference_polynomial,
    virtual_rank_check,
)
from lpbdeg.grassmann import GrassContext


def test_reference_formula_pinned_values():
    # recomputed by hand from the published displays before freezing
    assert reference_formula(3, 2) == 1320
    assert reference_formula(3, 3) == 10640
    assert reference_formula(3, 4) == 57120  # (20/27) * 56 * 51 * 27
    assert reference_formula(3, 1) == 80
    assert reference_formula(3, 0) == 0
    assert reference_formula(4, 2) == 739000


def test_reference_formula_validation():
    with pytest.raises(ValueError):
        reference_formula(5, 2)
    with pytest.raises(ValueError):
        reference_formula(3, -1)
    with pytest.raises(ValueError):
        reference_formula(4, 0)


def test_reference_polynomial_n3():
    poly = reference_polynomial(3)
    assert poly.degree == 9
    assert poly.coefficient(9) == Fraction(1, 162)
    assert poly.coefficient(0) == 0
    for d in range(0, 7):
        assert poly(d) == reference_formula(3, d)


def test_reference_polynomial_n4():
    poly = reference_polynomial(4)
    assert poly.degree == 18
    for d in range(1, 5):
        assert poly(d) == reference_formula(4, d)
    with pytest.raises(ValueError):
        reference_polynomial(5)


def test_degree_pinned_values():
    assert degree_lpb(2, 3) == 1320
    assert degree_lpb(3, 3) == 10640
    assert degree_lpb(4, 3) == 57120
    assert degree_lpb(1, 3) == 80
    assert degree_lpb(0, 3) == 0


def test_degree_matches_published_form_on_a_range():
    for d in range(0, 9):
        assert degree_lpb(d, 3) == reference_formula(3, d)


def test_degree_validation():
    with pytest.raises(ValueError):
        degree_lpb(-1, 3)
    with pytest.raises(ValueError):
        degree_lpb(2, 2)
    with pytest.raises(ValueError):
        degree_lpb(2, 3, method="fastest")


def test_methods_agree_small_grid():
    for d in range(0, 4):
        quotient = degree_lpb(d, 3, method=METHOD_CHERN_QUOTIENT)
        characters = degree_lpb(d, 3, method=METHOD_CH_PARTITION)
        both = degree_lpb(d, 3, method=METHOD_BOTH)
        assert quotient == characters == both


def test_character_route_n4():
    assert degree_lpb(2, 4, method=METHOD_CH_PARTITION) == 739000


def test_bundle_rank_matches_closed_count():
    ctx = GrassContext(3, 4)
    for d in range(0, 11):
        expr = pullback_forms_bundle(d)
        roots = chern_roots(expr, ctx)
        assert roots.is_honest
        assert roots.virtual_rank == (d + 1) * (d + 3)
        assert virtual_rank_check(d, 3) == (d + 1) * (d + 3)
    with pytest.raises(ValueError):
        pullback_forms_bundle(-1)


def test_invariants_examples():
    inv = lpb_invariants(2, 3)
    assert inv.bundle_rank == 15
    assert inv.grassmannian_dim == 3
    assert inv.dimension == 17
    inv0 = lpb_invariants(0, 3)
    assert inv0.bundle_rank == 3
    assert inv0.dimension == 5
    inv34 = lpb_invariants(3, 4)
    assert inv34.bundle_rank == 24
    assert inv34.grassmannian_dim == 6
    assert inv34.dimension == 29


def test_invariants_validation():
    with pytest.raises(ValueError):
        lpb_invariants(-1, 3)
    with pytest.raises(ValueError):
        lpb_invariants(2, 2)


def test_closed_form_n3_matches_published_polynomial():
    assert closed_form(3) == reference_polynomial(3)


def test_closed_form_uses_and_verifies_degree_fn():
    calls = []

    def fn(d):
        calls.append(d)
        return reference_formula(3, d)

    poly = closed_form(3, fn)
    assert poly == reference_polynomial(3)
    # 3g+1 nodes plus one held-out verification node
    assert calls == list(range(2, 12)) + [12]


def test_closed_form_detects_bad_verification_node():
    def fn(d):
        value = reference_formula(3, d)
        return value + 1 if d == 12 else value

    with pytest.raises(InternalInconsistencyError):
        closed_form(3, fn)


def test_closed_form_validation():
    with pytest.raises(ValueError):
        closed_form(2)


def test_degrees_positive_in_geometric_range():
    for d in range(2, 9):
        assert degree_lpb(d, 3) > 0


@settings(max_examples=8)
@given(st.integers(2, 20))
def test_closed_form_agrees_with_direct_evaluation(d):
    poly = reference_polynomial(3)
    assert poly(d) == degree_lpb(d, 3)
