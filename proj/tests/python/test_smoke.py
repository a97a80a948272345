"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import quotdeg as q


def test_derive_params():
    params = q.derive_params(6, 4, 2, 2)
    assert (params.a, params.b, params.eps, params.e_max, params.s_r) == (1, 2, 0, 0, 8)
    assert q.is_zero_dimensional(params)
    assert not q.is_zero_dimensional(q.derive_params(3, 1, 1, 2))


def test_holla_degree():
    assert q.holla_degree(6, 4, 2, 2) == 315
    assert q.holla_degree(2, 1, 1, 2) == 4
    assert q.holla_degree(q.derive_params(2, 0, 1, 3)) == 8
    assert isinstance(q.holla_degree(6, 4, 2, 2), int)


def test_positive_dimension_raises():
    with pytest.raises(q.DimensionPositive):
        q.holla_degree(3, 1, 1, 2)


def test_brute_force_oracle():
    params = q.derive_params(6, 4, 2, 2)
    assert abs(q.brute_force_degree(params) - 315.0) < 1e-6 * 315.0
    with pytest.raises(ValueError):
        q.brute_force_degree(params, max_n=4)


def test_bound_exact_matches_closed_forms():
    assert q.bound_exact(2, 3) == 35
    assert q.bound_exact(2, 5) == 165
    assert q.bound_exact(3, 3) == 329
    assert isinstance(q.bound_exact(2, 3), Fraction)


def test_bound_trig_tracks_exact():
    assert abs(q.bound_trig(2, 5) - 165.0) < 1e-9 * 165.0


def test_quotf_degree_bound():
    assert q.quotf_degree_bound(2, 3) == 315
    assert q.quotf_degree_bound(2, 5) == 4125
    assert q.quotf_degree_bound(3, 3) == 27 * 329


def test_specialize():
    params = q.specialize(3, 5)
    assert (params.n, params.d, params.r, params.g) == (10, 16, 2, 3)
    assert params.eps == 0


def test_hypothesis_validation():
    with pytest.raises(ValueError):
        q.bound_exact(5, 3)  # g >= p+1
    with pytest.raises(ValueError):
        q.bound_exact(2, 9)  # composite p


def test_g2_comparison():
    c = q.g2_comparison(7)
    assert c["exact"] == Fraction(119)
    assert c["bound"] == Fraction(455)
    assert c["gap"] == 336


def test_pushforward_degrees():
    assert q.pushforward_degrees(3, 5) == (16, 32, 0)


def test_bound_report():
    report = q.bound_report(2, 3)
    assert report["bound_exact"] == 35
    assert report["quotF_degree_bound"] == 315
    assert report["within_tol"]
    assert report["bound_is_integer"]
    assert report["gap"] == 24
    assert "g2_exact" not in q.bound_report(3, 5)


def test_bound_polynomial():
    poly = q.bound_polynomial(2)
    assert poly.degree == 3
    assert poly.coeffs() == {3: Fraction(4, 3), 1: Fraction(-1, 3)}
    assert poly(3) == 35
    assert q.eval_polynomial(poly, 0) == 0

    g3 = q.bound_polynomial(3)
    assert g3.coeffs() == {6: Fraction(16, 45), 4: Fraction(8, 9), 2: Fraction(-11, 45)}
    assert g3(5) == 6105


def test_root_sum_and_cyclotomic():
    assert q.nontrivial_root_sum(6, 2) == Fraction(-35, 12)
    assert q.nontrivial_root_sum(2, 2) == Fraction(-1, 4)
    assert q.cyclotomic(6) == [1, -1, 1]
    assert q.cyclotomic(1) == [-1, 1]
