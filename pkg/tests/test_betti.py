from itertools import product

import pytest

from qhilb.betti import (
    BettiError,
    BettiTable,
    enumerate_for,
    ext1_graded_dim,
    extremal_resolution,
    format_resolution,
    validate,
)
from qhilb.castelnuovo import enumerate_polys, in_N, n_membership, to_hilbert
from qhilb.ktheory import ext1_selfdim, from_resolution, invariants
from qhilb.series import LaurentPoly

P = LaurentPoly.parse


def admissible(a, b):
    """Direct reading of the admissibility conditions."""
    a = {d: n for d, n in a.items() if n}
    b = {d: n for d, n in b.items() if n}
    if not a:
        return False
    sigma = min(a)
    if any(d <= sigma for d in b):
        return False
    top = max([*a, *b])
    return all(
        sum(n for d, n in b.items() if d <= l) < sum(n for d, n in a.items() if d < l)
        for l in range(sigma + 1, top + 1)
    )


def brute_tables(q: LaurentPoly, extra: int = 2):
    """Every admissible table with characteristic polynomial q and at most ``extra`` pairs per degree."""
    lo, hi = q.min_degree, q.max_degree
    degrees = range(lo, hi + 1)
    found = set()
    for xs in product(range(extra + 1), repeat=len(degrees)):
        a = {d: max(q.coeff(d), 0) + x for d, x in zip(degrees, xs)}
        b = {d: max(-q.coeff(d), 0) + x for d, x in zip(degrees, xs)}
        if admissible(a, b):
            found.add(validate(a, b))
    return found


@pytest.mark.parametrize(
    "a, b",
    [({1: 2}, {2: 1}), ({2: 2, 3: 1}, {3: 1, 4: 1})],
)
def test_validate_accepts(a, b):
    validate(a, b)


@pytest.mark.parametrize("a, b", [({1: 1}, {1: 1}), ({}, {}), ({1: 1}, {2: 1}), ({1: -1}, {})])
def test_validate_rejects(a, b):
    with pytest.raises(BettiError):
        validate(a, b)


@pytest.mark.parametrize(
    "a, b, q",
    [({1: 1, 2: 1}, {3: 1}, "t + t^2 - t^3"), ({0: 1}, {}, "1"), ({2: 2}, {4: 1}, "2t^2 - t^4")],
)
def test_char_poly(a, b, q):
    assert validate(a, b).char_poly() == P(q)


@pytest.mark.parametrize("q, n", [("2t^2 - t^4", 2), ("t^2 + t^3 - t^5", 2), ("1", 1)])
def test_enumerate_counts(q, n):
    tables = enumerate_for(P(q))
    assert len(tables) == n
    assert all(t.char_poly() == P(q) for t in tables)


def test_enumerate_first_is_minimal():
    assert enumerate_for(P("1"))[0] == validate({0: 1}, {})
    assert enumerate_for(P("2t^2 - t^4"))[0] == validate({2: 2}, {4: 1})


@pytest.mark.parametrize("n_e, n_o", [(a, b) for a in range(5) for b in range(5) if in_N(a, b)])
def test_enumerate_matches_brute_force(n_e, n_o):
    for s in enumerate_polys(n_e, n_o):
        q = s.char_poly()
        tables = enumerate_for(q)
        # the brute force caps canceling pairs at two per degree; none of these need more
        assert all(n - max(q.coeff(d), 0) <= 2 for t in tables for d, n in t.a)
        assert set(tables) == brute_tables(q)
        assert len(set(tables)) == len(tables)


def test_enumerate_degenerate_inputs():
    assert enumerate_for(LaurentPoly()) == []
    assert enumerate_for(P("-t + t^2")) == []


def test_rank_two_requires_bound():
    with pytest.raises(BettiError):
        enumerate_for(P("2"))
    assert len(enumerate_for(P("2"), degree_bound=1)) == 2


@pytest.mark.parametrize(
    "n_e, n_o, a, b",
    [(1, 0, {1: 2}, {2: 1}), (1, 2, {2: 3}, {3: 2}), (0, 0, {0: 1}, {})],
)
def test_extremal(n_e, n_o, a, b):
    assert extremal_resolution(n_e, n_o) == validate(a, b)


@pytest.mark.parametrize("n_e, n_o", [(k * k, k * (k + 1)) for k in range(4)] + [((k + 1) ** 2, k * (k + 1)) for k in range(4)])
def test_extremal_is_the_unique_resolution_on_the_boundary(n_e, n_o):
    (s,) = enumerate_polys(n_e, n_o)
    (t,) = enumerate_for(s.char_poly())
    assert t == extremal_resolution(n_e, n_o)
    assert invariants(from_resolution(t)) == (n_e, n_o)


def test_extremal_rejects_outside():
    with pytest.raises(BettiError):
        extremal_resolution(0, 1)


@pytest.mark.parametrize(
    "coeffs, ext",
    [((1, 2, 1), 4), ((1, 1, 1, 1), 3), ((1, 2, 2, 1), 6)],
)
def test_ext1_values(coeffs, ext):
    (s,) = [p for p in enumerate_polys(sum(coeffs[0::2]), sum(coeffs[1::2])) if p.coeffs == coeffs]
    q = s.char_poly()
    h = to_hilbert(s, q.max_degree)
    assert {ext1_graded_dim(t, h) for t in enumerate_for(q)} == {ext}


@pytest.mark.parametrize("n_e, n_o", [(a, b) for a in range(5) for b in range(5) if in_N(a, b)])
def test_ext1_graded_never_exceeds_total(n_e, n_o):
    # the graded piece sits inside the full self-extension group
    for s in enumerate_polys(n_e, n_o):
        q = s.char_poly()
        h = to_hilbert(s, max(q.max_degree, 0))
        for t in enumerate_for(q):
            assert 0 <= ext1_graded_dim(t, h) <= ext1_selfdim(n_e, n_o)


def test_json_round_trip():
    t = validate({2: 2, 3: 1}, {3: 1, 4: 1})
    assert t.to_json() == {"a": {"2": 2, "3": 1}, "b": {"3": 1, "4": 1}}
    assert BettiTable.from_json(t.to_json()) == t
    with pytest.raises(BettiError):
        BettiTable.from_json({"a": [1]})


def test_format():
    assert format_resolution(validate({2: 2, 3: 1}, {3: 1, 4: 1})) == "A(-3)⊕A(-4) → A(-2)^2⊕A(-3)"
    assert str(validate({0: 1}, {})) == "A(0)"
