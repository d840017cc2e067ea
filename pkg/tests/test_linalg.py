import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhilb.fields import GF, QQ, field_from_tag
from qhilb.linalg import Matrix, mat

from oracles import rank_exact, rank_mod_p


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F(-1) == 6
    assert F.parse("1/3") == 5
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_field_tags_round_trip():
    assert field_from_tag("q") is QQ
    assert field_from_tag("fp:11") == GF(11)
    assert GF(11).tag == "fp:11"
    for bad in ("fp:12", "fp:x", "r"):
        with pytest.raises(ValueError):
            field_from_tag(bad)


def test_empty_shapes_compose():
    A = Matrix.zeros(QQ, 0, 3)
    B = Matrix.zeros(QQ, 3, 2)
    assert (A @ B).shape == (0, 2)
    assert (B.T @ Matrix.zeros(QQ, 3, 0)).shape == (2, 0)
    assert A.T.shape == (3, 0)
    assert Matrix.zeros(QQ, 2, 0).rank() == 0


def test_inverse_and_solve():
    A = mat([[2, 1], [1, 1]])
    assert A @ A.inverse() == Matrix.identity(QQ, 2)
    x, kernel = A.solve([3, 2])
    assert x == [1, 1] and kernel == []
    assert mat([[1, 1], [1, 1]]).solve([0, 1]) is None
    with pytest.raises(ZeroDivisionError):
        mat([[1, 2], [2, 4]]).inverse()


def test_left_nullspace_annihilates():
    B = mat([[1, 2], [2, 4], [0, 1]])
    N = B.left_nullspace()
    assert N.nrows == 1 and (N @ B).is_zero()


small = st.integers(-3, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_matches_independent_elimination(m, n, data):
    rows = [[data.draw(small) for _ in range(n)] for _ in range(m)]
    assert mat(rows).rank() == rank_exact(rows)
    assert Matrix(GF(3), rows).rank() == rank_mod_p(rows, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_rank_nullity(m, n, seed):
    for F in (QQ, GF(5)):
        A = Matrix.random(F, m, n, random.Random(seed))
        kernel = A.nullspace()
        assert A.rank() + len(kernel) == n
        for v in kernel:
            assert (A @ Matrix.column(F, v)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_solve_returns_solutions(n, seed):
    rng = random.Random(seed)
    A = Matrix.random(QQ, n, n + 1, rng)
    b = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
    sol = A.solve(b)
    if sol is not None:
        x, _ = sol
        assert (A @ Matrix.column(QQ, x)).entries() == b
