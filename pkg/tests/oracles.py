"""Slow, independent reference computations used as test oracles.

Nothing here imports from ``qhilb``; each routine recomputes a quantity from
first principles by brute force so that it can be compared with the library.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def partitions_brute(n: int) -> int:
    """Ordinary partitions of ``n``, by listing nonincreasing sequences."""

    def rec(rest, cap):
        if rest == 0:
            return 1
        return sum(rec(rest - part, part) for part in range(min(rest, cap), 0, -1))

    return rec(n, n)


def hA_series(order: int) -> list[int]:
    """Coefficients of ``1/((1-t)^2 (1-t^2))`` by multiplying geometric series."""
    geo = [1] * (order + 1)
    even = [1 if i % 2 == 0 else 0 for i in range(order + 1)]

    def mul(f, g):
        return [sum(f[i] * g[n - i] for i in range(n + 1)) for n in range(order + 1)]

    return mul(mul(geo, geo), even)


def series_times_hA(q: dict[int, int], order: int) -> list[int]:
    """Coefficients ``0..order`` of ``q * h_A`` for a polynomial ``q`` with nonnegative degrees."""
    h = hA_series(order)
    return [sum(c * h[n - d] for d, c in q.items() if 0 <= n - d) for n in range(order + 1)]


def is_castelnuovo(seq: tuple[int, ...]) -> bool:
    """Staircase ``1, 2, ..., sigma`` followed by a nonincreasing tail, no trailing zero."""
    if seq and seq[-1] == 0:
        return False
    sigma = 0
    while sigma < len(seq) and seq[sigma] == sigma + 1:
        sigma += 1
    tail = seq[sigma:]
    if tail and tail[0] > sigma:
        return False
    return all(x >= y for x, y in zip(tail, tail[1:])) and all(x >= 0 for x in seq)


def compositions(n: int):
    """Every sequence of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def castelnuovo_brute(n_e: int, n_o: int) -> set[tuple[int, ...]]:
    """Filter every composition of the total weight."""
    return {
        seq
        for seq in compositions(n_e + n_o)
        if is_castelnuovo(seq) and sum(seq[0::2]) == n_e and sum(seq[1::2]) == n_o
    }


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank_exact(rows: list[list]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def moduli_count_brute(n_e: int, n_o: int, p: int) -> int:
    """Count ``F_p``-points by looping over every quadruple of matrices."""

    def mats(r, c):
        for vals in product(range(p), repeat=r * c):
            yield [list(vals[i * c:(i + 1) * c]) for i in range(r)]

    def mm(A, B, inner, r, c):
        return [[sum(A[i][k] * B[k][j] for k in range(inner)) % p for j in range(c)] for i in range(r)]

    count = 0
    for X in mats(n_e, n_o):
        for Y in mats(n_e, n_o):
            for Xp in mats(n_o, n_e):
                for Yp in mats(n_o, n_e):
                    a, b = mm(Yp, X, n_e, n_o, n_o), mm(Xp, Y, n_e, n_o, n_o)
                    if any((a[i][j] - b[i][j] - (i == j)) % p for i in range(n_o) for j in range(n_o)):
                        continue
                    c, d = mm(Y, Xp, n_o, n_e, n_e), mm(X, Yp, n_o, n_e, n_e)
                    R = [[(c[i][j] - d[i][j] - (i == j)) % p for j in range(n_e)] for i in range(n_e)]
                    if not R or rank_mod_p(R, p) <= 1:
                        count += 1
    return count


def shift_via_hilbert_function(x: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Twist a geometric-basis class without the shift matrices.

    A class is determined by the four numbers ``chi(O, M(l))``, ``l = 0..3``;
    twisting by ``d`` reads them off at ``l = d..d+3`` instead.
    """
    r, a, b, c = x
    # chi(O, M(l)) for l = 0..3 from the polynomial r + a(1-t) + b(1-t^2) + c(1-t)(1-t^2)
    q = {0: r + a + b + c, 1: -a - c, 2: -b - c, 3: c}
    vals = {}
    for l in range(d, d + 4):
        vals[l - d] = sum(coef * hA_coefficient(l - deg) for deg, coef in q.items())
    return _class_from_values(vals)


def hA_coefficient(n: int) -> int:
    """``chi(O, O(n))`` on the quadric; the quasi-polynomial is valid for every ``n``."""
    return (n + 2) ** 2 // 4


def _class_from_values(vals: dict[int, int]) -> tuple[int, ...]:
    basis = {
        "r": {0: 1},
        "a": {0: 1, 1: -1},
        "b": {0: 1, 2: -1},
        "c": {0: 1, 1: -1, 2: -1, 3: 1},
    }
    rows = []
    for l in range(4):
        rows.append([sum(cf * hA_coefficient(l - d) for d, cf in basis[k].items()) for k in "rabc"])
    rhs = [vals[l] for l in range(4)]
    sol = _solve(rows, rhs)
    return tuple(int(v) for v in sol)


def _solve(A, b):
    n = len(A)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c])
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]
