from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhilb.series import (
    LaurentPoly,
    char_poly_of_series,
    expand_over_hA,
    gk_dim_and_multiplicity,
    hA_coefficient,
    rank,
)

from oracles import hA_series, series_times_hA

P = LaurentPoly.parse
POINT = P("1 - t - t^2 + t^3")


@pytest.mark.parametrize(
    "q, order, expected",
    [
        ("1", 5, [1, 2, 4, 6, 9, 12]),
        ("1 - t - t^2 + t^3", 4, [1, 1, 1, 1, 1]),
        ("1 - t", 5, [1, 1, 2, 2, 3, 3]),
    ],
)
def test_expand(q, order, expected):
    h = expand_over_hA(P(q), order)
    assert h.start == 0 and list(h.coeffs) == expected


def test_expand_negative_degrees_starts_window_early():
    h = expand_over_hA(LaurentPoly({-1: 1}), 2)
    assert h.start == -1 and list(h.coeffs) == [1, 2, 4, 6]


@pytest.mark.parametrize("n, dim", [(0, 1), (3, 6), (-1, 0)])
def test_hA_coefficient(n, dim):
    assert hA_coefficient(n) == dim


def test_hA_against_geometric_series():
    assert [hA_coefficient(n) for n in range(30)] == hA_series(29)


@pytest.mark.parametrize(
    "q, gk, e",
    [("1", 3, Fraction(1, 2)), ("1 - t", 2, Fraction(1, 2)), ("1 - t - t^2 + t^3", 1, 1)],
)
def test_gk_dim_and_multiplicity(q, gk, e):
    assert gk_dim_and_multiplicity(P(q)) == (gk, e)


def test_line_multiplicity_by_limit():
    # h_n - h_(n-2) = 1 eventually, so h_n ~ n/2
    h = expand_over_hA(P("1 - t"), 40).coeffs
    second = [h[n + 2] - h[n] for n in range(38)]
    assert set(second[2:]) == {1}


def test_point_multiplicity_by_constant_series():
    h = expand_over_hA(POINT, 20).coeffs
    assert set(h) == {1}


def test_gk_rejects_impossible_vanishing():
    with pytest.raises(ValueError):
        gk_dim_and_multiplicity(P("1 - t") ** 4)


@pytest.mark.parametrize("q, r", [("1", 1), ("2t^2 - t^4", 1), ("1 - t", 0)])
def test_rank(q, r):
    assert rank(P(q)) == r


def test_parse_and_print_round_trip():
    q = P("1 - 2t + t^2 - 3t^-1")
    assert q.terms == {0: 1, 1: -2, 2: 1, -1: -3}
    assert P(str(q)) == q
    assert LaurentPoly.from_json(q.to_json()) == q


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        P("1 + x")


def test_divide_exact():
    assert (P("1 - t") * P("1 + t^2")).divide_exact(P("1 - t")) == P("1 + t^2")
    with pytest.raises(ValueError):
        P("1 + t^2").divide_exact(P("1 - t"))


def test_no_stored_zeros():
    assert (P("1 + t") - P("t")).terms == {0: 1}
    assert (P("t") - P("t")).is_zero()


polys = st.dictionaries(st.integers(0, 6), st.integers(-4, 4), max_size=5).map(LaurentPoly)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_expand_matches_oracle(q):
    h = expand_over_hA(q, 10)
    assert list(h.coeffs) == series_times_hA(q.terms, 10)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_series_round_trip(q):
    top = q.max_degree if not q.is_zero() else 0
    assert char_poly_of_series(expand_over_hA(q, top + 3)) == q


@settings(max_examples=50, deadline=None)
@given(polys, polys)
def test_ring_laws(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g)(2) == f(2) * g(2)
