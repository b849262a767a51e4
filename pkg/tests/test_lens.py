"""Lens pipeline: expansions, determinants, words, parities, targets."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spuncalc.errors import SpuncalcError
from spuncalc.fourman import FourManifoldForm
from spuncalc.homology import det
from spuncalc.lens import (
    ContinuedFraction,
    cf_eval,
    cf_expand,
    lens_embedding_target,
    lens_open_book,
    plumbing_matrix,
    psi_parity,
    reconcile,
    slid_diagram,
)
from spuncalc.planar import twist
from spuncalc.surgery import h1_invariants, linking_matrix


def oracle_eval(coeffs):
    """Backward evaluation with Fractions, written independently."""
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - Fraction(1) / value
    return value


coprime_pairs = st.integers(2, 120).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1))
).filter(lambda t: gcd(t[0], t[1]) == 1)


def test_cf_expand_examples():
    assert cf_expand(7, 1).coefficients == (-7,)
    assert cf_expand(7, 2).coefficients == (-4, -2)
    assert cf_expand(4, 3).coefficients == (-2, -2, -2)
    assert cf_expand(7, 3).coefficients == (-3, -2, -2)


def test_cf_eval_examples():
    assert cf_eval(ContinuedFraction((-7,))) == Fraction(-7)
    assert cf_eval(ContinuedFraction((-4, -2))) == Fraction(-7, 2)
    assert cf_eval(ContinuedFraction((-2, -2, -2))) == Fraction(-4, 3)
    assert oracle_eval((-4, -2)) == Fraction(-7, 2)


def test_cf_input_validation():
    with pytest.raises(SpuncalcError):
        cf_expand(4, 2)
    with pytest.raises(SpuncalcError):
        cf_expand(3, 3)
    with pytest.raises(SpuncalcError):
        cf_expand(3, 0)
    with pytest.raises(SpuncalcError):
        ContinuedFraction((-1,))
    with pytest.raises(SpuncalcError):
        ContinuedFraction(())


@given(coprime_pairs)
@settings(max_examples=200, deadline=None)
def test_cf_roundtrip_against_oracle(pq):
    p, q = pq
    c = cf_expand(p, q)
    assert all(a <= -2 for a in c.coefficients)
    assert cf_eval(c) == Fraction(-p, q) == oracle_eval(c.coefficients)


def test_plumbing_matrix_examples():
    assert plumbing_matrix(ContinuedFraction((-7,))).rows == ((-7,),)
    m = plumbing_matrix(ContinuedFraction((-4, -2)))
    assert m.rows == ((-4, 1), (1, -2))
    assert m.det() == 7
    assert plumbing_matrix(ContinuedFraction((-2, -2, -2))).det() == -4


@given(coprime_pairs)
@settings(max_examples=150, deadline=None)
def test_plumbing_det_is_p(pq):
    p, q = pq
    assert abs(plumbing_matrix(cf_expand(p, q)).det()) == p


def test_slid_diagram_examples():
    sd = slid_diagram(ContinuedFraction((-4, -2)))
    assert sd.framings == (-4, -4)
    assert sd.linking(1, 2) == -3
    assert sd.twist_regions == (-3, 0)

    sd = slid_diagram(ContinuedFraction((-2, -2, -2)))
    assert sd.framings == (-2, -2, -2)
    assert all(sd.linking(i, j) == -1 for i in range(1, 4) for j in range(1, 4) if i != j)
    assert abs(sd.linking_det()) == 4

    sd = slid_diagram(ContinuedFraction((-5,)))
    assert sd.framings == (-5,)
    assert sd.links == ()
    assert sd.twist_regions == (-4,)


@given(coprime_pairs)
@settings(max_examples=150, deadline=None)
def test_slid_det_matches_materialized_matrix_and_p(pq):
    p, q = pq
    sd = slid_diagram(cf_expand(p, q))
    fast = sd.linking_det()
    assert fast == det(sd.linking_matrix().rows)
    assert abs(fast) == p


@given(coprime_pairs)
@settings(max_examples=60, deadline=None)
def test_slid_braid_diagram_realizes_same_homology(pq):
    p, q = pq
    sd = slid_diagram(cf_expand(p, q))
    d = sd.as_braid_diagram()
    assert linking_matrix(d) == sd.linking_matrix()
    inv = h1_invariants(d)
    assert inv.order() == p


def test_lens_open_book_k1():
    page, word = lens_open_book(ContinuedFraction((-5,)))
    assert page.inner_count == 1
    assert word.letters == (twist({1}, -5), twist({1}, -4))


def test_lens_open_book_k2_keeps_zero_exponents():
    page, word = lens_open_book(ContinuedFraction((-4, -2)))
    assert page.inner_count == 2
    assert word.letters == (
        twist({1}, -4),
        twist({2}, -4),
        twist({1, 2}, -3),
        twist({2}, 0),
    )


@given(coprime_pairs)
@settings(max_examples=80, deadline=None)
def test_lens_open_book_structure(pq):
    p, q = pq
    c = cf_expand(p, q)
    page, word = lens_open_book(c)
    assert page.inner_count == len(c)
    assert len(word) == 2 * len(c)


def test_psi_parity_examples():
    assert psi_parity(ContinuedFraction((-8,))) == (0,)
    assert psi_parity(ContinuedFraction((-7,))) == (1,)
    assert psi_parity(ContinuedFraction((-3, -2, -2))) == (1, 1, 1)
    assert psi_parity(ContinuedFraction((-4, -2))) == (0, 0)


def test_reconciliation_reports_both_parities():
    rec = reconcile(ContinuedFraction((-4, -2)))
    assert rec.word_parity == (1, 1)  # raw diagram word: every entry odd
    assert rec.psi == (0, 0)
    assert not rec.agree
    data = rec.to_json()
    assert data["agree"] is False


def test_lens_embedding_targets():
    assert lens_embedding_target(8, 1) == FourManifoldForm(dim=2, trivial_bundle=1)
    assert lens_embedding_target(7, 1) == FourManifoldForm(dim=2, twisted_bundle=1)
    assert lens_embedding_target(7, 3) == FourManifoldForm(dim=2, twisted_bundle=3)
    assert lens_embedding_target(7, 2) == FourManifoldForm(dim=2, trivial_bundle=2)
    assert lens_embedding_target(4, 3) == FourManifoldForm(dim=2, trivial_bundle=3)


@given(coprime_pairs)
@settings(max_examples=150, deadline=None)
def test_target_spin_iff_all_coefficients_even(pq):
    p, q = pq
    c = cf_expand(p, q)
    target = lens_embedding_target(p, q)
    assert target.summand_count() == len(c)
    assert target.is_spin() == all(a % 2 == 0 for a in c.coefficients)
