import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhilb.castelnuovo import (
    CastelnuovoError,
    CastelnuovoPoly,
    NMembership,
    chess_weights,
    count,
    diagram,
    distinct_partitions,
    enumerate_polys,
    extremal_castelnuovo,
    from_char_poly,
    from_partition,
    in_N,
    n_membership,
    to_hilbert,
    to_partition,
    validate,
)
from qhilb.series import LaurentPoly

from oracles import castelnuovo_brute, partitions_brute

P = LaurentPoly.parse
EXAMPLE = [1, 2, 3, 4, 5, 5, 3, 2, 1, 1, 1, 1]


def test_validate_accepts_long_example():
    s = validate(EXAMPLE)
    assert s.sigma == 5
    assert s.weights == (14, 15)


def test_validate_empty_and_trailing_zeros():
    assert validate([]).coeffs == ()
    assert validate([1, 1, 0, 0]).coeffs == (1, 1)


@pytest.mark.parametrize("coeffs, index", [([1, 1, 2], 2), ([2], 0), ([1, -1], 1), ([1, 2, 3, 4, 5], None)])
def test_validate_reports_first_bad_index(coeffs, index):
    if index is None:
        validate(coeffs)
        return
    with pytest.raises(CastelnuovoError) as err:
        validate(coeffs)
    assert err.value.index == index


@pytest.mark.parametrize("coeffs, w", [([1, 1, 1], (2, 1)), ([], (0, 0))])
def test_weights(coeffs, w):
    assert validate(coeffs).weights == w


def test_enumerate_examples():
    assert {s.coeffs for s in enumerate_polys(2, 2)} == {(1, 2, 1), (1, 1, 1, 1)}
    assert {s.coeffs for s in enumerate_polys(3, 3)} == {(1, 2, 2, 1), (1, 2, 1, 1, 1), (1, 1, 1, 1, 1, 1)}
    assert enumerate_polys(0, 1) == []
    assert [s.coeffs for s in enumerate_polys(0, 0)] == [()]


@pytest.mark.parametrize("n_e, n_o", [(a, b) for a in range(7) for b in range(7)])
def test_enumerate_matches_brute_force(n_e, n_o):
    polys = enumerate_polys(n_e, n_o)
    coeffs = [s.coeffs for s in polys]
    assert coeffs == sorted(coeffs)
    assert set(coeffs) == castelnuovo_brute(n_e, n_o)


@pytest.mark.parametrize("n_e, n_o, c", [(2, 2, 2), (3, 3, 3), (5, 3, 1), (0, 1, 0)])
def test_count_examples(n_e, n_o, c):
    assert count(n_e, n_o) == c


@pytest.mark.parametrize(
    "coeffs, order, expected",
    [([1, 1], 6, [0, 1, 3, 5, 8, 11, 15]), ([1, 2, 2], 6, [0, 0, 1, 4, 6, 10, 13]), ([], 3, [1, 2, 4, 6])],
)
def test_to_hilbert(coeffs, order, expected):
    assert list(to_hilbert(validate(coeffs), order).coeffs) == expected


@pytest.mark.parametrize("q, s", [("2t - t^2", (1,)), ("1", ()), ("2t^2 - t^4", (1, 2, 1))])
def test_from_char_poly(q, s):
    assert from_char_poly(P(q)).coeffs == s


def test_from_char_poly_rejects_non_castelnuovo():
    with pytest.raises(CastelnuovoError):
        from_char_poly(P("-1 + 4t - 2t^2"))  # s = 2


@pytest.mark.parametrize(
    "coeffs, parts, chess",
    [([1, 1], (2,), (1, 1)), ([1, 2, 1], (3, 1), (2, 2)), ([], (), (0, 0))],
)
def test_partition_and_chess(coeffs, parts, chess):
    s = validate(coeffs)
    assert to_partition(s) == parts
    assert chess_weights(parts) == chess
    assert from_partition(parts) == s


@pytest.mark.parametrize("total", range(13))
def test_partition_bijection(total):
    """Castelnuovo polynomials of total weight n correspond to distinct partitions of n."""
    polys = [s for n_e in range(total + 1) for s in enumerate_polys(n_e, total - n_e)]
    parts = sorted(to_partition(s) for s in polys)
    assert parts == sorted(distinct_partitions(total))
    for s in polys:
        assert chess_weights(to_partition(s)) == s.weights
        assert from_partition(to_partition(s)) == s


def test_from_partition_rejects_repeated_parts():
    with pytest.raises(ValueError):
        from_partition([2, 2])


def _membership_by_scan(n_e, n_o):
    """Find the boundary point of N below (n_e, n_o) along the diagonal by search."""
    hits = []
    for k in range(n_e + n_o + 1):
        for case, corner in ((1, (k * k, k * (k + 1))), (2, ((k + 1) ** 2, k * (k + 1)))):
            l = n_e - corner[0]
            if l >= 0 and n_o - corner[1] == l:
                hits.append(NMembership(k, l, case))
    return hits


@pytest.mark.parametrize("n_e, n_o", [(a, b) for a in range(12) for b in range(12)])
def test_n_membership_matches_scan(n_e, n_o):
    m = n_membership(n_e, n_o)
    hits = _membership_by_scan(n_e, n_o)
    if not in_N(n_e, n_o):
        assert m is None and hits == []
    else:
        assert hits == [m]


@pytest.mark.parametrize(
    "ne_no, expected",
    [((1, 0), NMembership(0, 0, 2)), ((2, 2), NMembership(0, 2, 1)), ((0, 0), NMembership(0, 0, 1))],
)
def test_n_membership_examples(ne_no, expected):
    assert n_membership(*ne_no) == expected


@pytest.mark.parametrize(
    "k, case, coeffs, w",
    [(0, 2, (1,), (1, 0)), (1, 1, (1, 2), (1, 2)), (1, 2, (1, 2, 3), (4, 2)), (0, 1, (), (0, 0))],
)
def test_extremal(k, case, coeffs, w):
    s = extremal_castelnuovo(k, case)
    assert s.coeffs == coeffs and s.weights == w
    assert count(*w) == 1


def test_extremal_rejects_bad_labels():
    with pytest.raises(ValueError):
        extremal_castelnuovo(0, 3)


def test_diagram():
    assert diagram(validate([1, 2, 1])) == " .\n#.#"


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 4), max_size=8))
def test_validate_agrees_with_shape_predicate(coeffs):
    from oracles import is_castelnuovo

    stripped = list(coeffs)
    while stripped and stripped[-1] == 0:
        stripped.pop()
    try:
        validate(coeffs)
        ok = True
    except CastelnuovoError:
        ok = False
    assert ok == is_castelnuovo(tuple(stripped))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 9), st.integers(0, 9))
def test_count_is_partition_number(n_e, n_o):
    expected = partitions_brute(n_e - (n_e - n_o) ** 2) if in_N(n_e, n_o) else 0
    assert count(n_e, n_o) == expected


def test_char_poly_round_trip():
    for s in enumerate_polys(4, 4):
        assert from_char_poly(s.char_poly()) == s
    assert isinstance(from_char_poly(P("1")), CastelnuovoPoly)
