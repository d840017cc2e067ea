"""Points of the affine variety of quadruples ``(X, Y, X', Y')`` with

    Y'X - X'Y = I_(n_o)        and        rank(YX' - XY' - I_(n_e)) <= 1,

where ``X, Y`` are ``n_e x n_o`` and ``X', Y'`` are ``n_o x n_e``.  Dividing
by ``GL(n_e) x GL(n_o)`` gives the moduli space of normalized rank-one
ideals with invariants ``(n_e, n_o)``, which is smooth of dimension
``2(n_e - (n_e - n_o)^2)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product

from .castelnuovo import in_N
from .errors import BudgetExceeded
from .fields import Field, PrimeField, field_from_tag
from .linalg import Matrix
from .quiver import QuiverRep0

#: ``4 * n_e * n_o * log2(p)`` above this is refused by :func:`count_exhaustive`.
EXHAUSTIVE_LOG2_LIMIT = 24


@dataclass(frozen=True)
class ModuliPoint:
    X: Matrix
    Y: Matrix
    Xp: Matrix
    Yp: Matrix

    @property
    def field(self) -> Field:
        return self.X.field

    @property
    def n_e(self) -> int:
        return self.X.nrows

    @property
    def n_o(self) -> int:
        return self.X.ncols

    def z(self) -> Matrix:
        return self.Yp @ self.X - self.Xp @ self.Y

    def residual(self) -> Matrix:
        """``YX' - XY' - I``."""
        return self.Y @ self.Xp - self.X @ self.Yp - Matrix.identity(self.field, self.n_e)

    def to_rep0(self) -> QuiverRep0:
        return QuiverRep0.from_matrices(self.X, self.Y, self.Xp, self.Yp)

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "ne": self.n_e,
            "no": self.n_o,
            "X": self.X.to_strings(),
            "Y": self.Y.to_strings(),
            "Xp": self.Xp.to_strings(),
            "Yp": self.Yp.to_strings(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ModuliPoint":
        if not isinstance(obj, dict):
            raise ValueError("a moduli point is a JSON object")
        try:
            F = field_from_tag(obj.get("field", "q"))
            n_e, n_o = int(obj["ne"]), int(obj["no"])
            shapes = {"X": n_o, "Y": n_o, "Xp": n_e, "Yp": n_e}
            mats = {
                k: Matrix(F, [[F.parse(str(x)) for x in row] for row in obj[k]], ncols)
                for k, ncols in shapes.items()
            }
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed moduli point: {exc!r}") from None
        pt = cls(mats["X"], mats["Y"], mats["Xp"], mats["Yp"])
        if pt.X.shape != (n_e, n_o) or pt.Xp.shape != (n_o, n_e) or pt.Y.shape != pt.X.shape or pt.Yp.shape != pt.Xp.shape:
            raise ValueError("matrix shapes do not match (ne, no)")
        return pt


def membership(X: Matrix, Y: Matrix, Xp: Matrix, Yp: Matrix) -> bool:
    n_e, n_o = X.shape
    if Y.shape != (n_e, n_o) or Xp.shape != (n_o, n_e) or Yp.shape != (n_o, n_e):
        raise ValueError("shapes must be X, Y: n_e x n_o and X', Y': n_o x n_e")
    pt = ModuliPoint(X, Y, Xp, Yp)
    return pt.z() == Matrix.identity(X.field, n_o) and pt.residual().rank() <= 1


def expected_tangent_dim(n_e: int, n_o: int) -> int:
    """Moduli dimension plus the dimension of ``GL(n_e) x GL(n_o)`` acting with scalar stabilizer."""
    return 2 * (n_e - (n_e - n_o) ** 2) + n_e**2 + n_o**2 - 1


# search


@dataclass(frozen=True)
class _Layout:
    """Column positions of the unknowns ``(X', Y', v)`` in the search system."""

    n_e: int
    n_o: int

    def xp(self, i, j):
        return i * self.n_e + j

    def yp(self, i, j):
        return self.n_o * self.n_e + i * self.n_e + j

    def v(self, j):
        return 2 * self.n_o * self.n_e + j

    @property
    def size(self):
        return 2 * self.n_o * self.n_e + self.n_e

    def unpack(self, field, x):
        """``X'`` and ``Y'`` from a solution vector."""
        rows = range(self.n_o)
        Xp = Matrix(field, [[x[self.xp(i, j)] for j in range(self.n_e)] for i in rows], self.n_e)
        Yp = Matrix(field, [[x[self.yp(i, j)] for j in range(self.n_e)] for i in rows], self.n_e)
        return Xp, Yp


def _search_system(X: Matrix, Y: Matrix, u: list):
    """Linear equations in ``(X', Y', v)`` for ``Y'X - X'Y = I`` and ``YX' - XY' - u v^T = I``."""
    F = X.field
    n_e, n_o = X.shape
    L = _Layout(n_e, n_o)
    xp, yp, v, n = L.xp, L.yp, L.v, L.size
    rows, rhs = [], []
    for i in range(n_o):
        for j in range(n_o):
            row = [F.zero] * n
            for k in range(n_e):
                row[yp(i, k)] = F.add(row[yp(i, k)], X[k, j])
                row[xp(i, k)] = F.sub(row[xp(i, k)], Y[k, j])
            rows.append(row)
            rhs.append(F.one if i == j else F.zero)
    for i in range(n_e):
        for j in range(n_e):
            row = [F.zero] * n
            for k in range(n_o):
                row[xp(k, j)] = F.add(row[xp(k, j)], Y[i, k])
                row[yp(k, j)] = F.sub(row[yp(k, j)], X[i, k])
            row[v(j)] = F.sub(row[v(j)], u[i])
            rows.append(row)
            rhs.append(F.one if i == j else F.zero)
    return Matrix(F, rows, n), rhs


def search(n_e: int, n_o: int, field: Field, budget: int = 200, seed: int = 0) -> list[ModuliPoint]:
    """Random points of the variety, each verified by :func:`membership`.

    Writing the rank-one residual as ``u v^T``, both defining equations are
    linear in ``(X', Y', v)`` once ``X, Y, u`` are fixed.  Each attempt draws
    ``X, Y, u`` at random and, when the system is consistent, a random point
    of its solution space.  ``budget`` bounds the number of attempts; fewer
    points than attempts may come back.
    """
    if not in_N(n_e, n_o):
        raise ValueError(f"({n_e}, {n_o}) is outside the admissible set; the variety is empty")
    rng = random.Random(seed)
    layout = _Layout(n_e, n_o)
    found, seen = [], set()
    for _ in range(budget):
        X = Matrix.random(field, n_e, n_o, rng)
        Y = Matrix.random(field, n_e, n_o, rng)
        u = [field.random_element(rng) for _ in range(n_e)]
        A, b = _search_system(X, Y, u)
        sol = A.solve(b)
        if sol is None:
            continue
        x, kernel = sol
        for vec in kernel:
            c = field.random_element(rng)
            x = [field.add(xi, field.mul(c, ki)) for xi, ki in zip(x, vec)]
        Xp, Yp = layout.unpack(field, x)
        if not membership(X, Y, Xp, Yp):
            raise AssertionError("search produced a non-member")
        pt = ModuliPoint(X, Y, Xp, Yp)
        key = (X.rows, Y.rows, Xp.rows, Yp.rows)
        if key not in seen:
            seen.add(key)
            found.append(pt)
    return found


# exhaustive counting


def _matrices(field: PrimeField, m: int, n: int):
    for vals in product(range(field.p), repeat=m * n):
        yield Matrix(field, [vals[i * n:(i + 1) * n] for i in range(m)], n)


def count_exhaustive(n_e: int, n_o: int, p: int) -> int:
    """Number of ``F_p``-points, by enumerating ``(X, Y)`` and solving for ``(X', Y')``."""
    if n_e * n_o and 4 * n_e * n_o * math.log2(p) > EXHAUSTIVE_LOG2_LIMIT:
        raise BudgetExceeded(f"4*{n_e}*{n_o}*log2({p}) exceeds {EXHAUSTIVE_LOG2_LIMIT}")
    F = field_from_tag(f"fp:{p}")
    if n_e * n_o == 0:
        # no matrix entries; the conditions reduce to I_(n_o) = 0 and rank(-I_(n_e)) <= 1
        return int(n_o == 0 and n_e <= 1)
    layout = _Layout(n_e, n_o)
    n_unknowns = 2 * n_o * n_e
    total = 0
    for X in _matrices(F, n_e, n_o):
        for Y in _matrices(F, n_e, n_o):
            A, b = _search_system(X, Y, [F.zero] * n_e)
            Z_rows = A.submatrix(range(n_o * n_o), range(n_unknowns))
            sol = Z_rows.solve(b[: n_o * n_o])
            if sol is None:
                continue
            x0, kernel = sol
            for coeffs in product(range(p), repeat=len(kernel)):
                x = list(x0)
                for c, vec in zip(coeffs, kernel):
                    if c:
                        x = [F.add(xi, F.mul(c, ki)) for xi, ki in zip(x, vec)]
                Xp, Yp = layout.unpack(F, x)
                if (Y @ Xp - X @ Yp - Matrix.identity(F, n_e)).rank() <= 1:
                    total += 1
    return total


# tangent spaces


def _jacobian_rows(pt: ModuliPoint) -> list[list]:
    """Differentials of the entries of ``Z - I`` and of every 2x2 minor of the residual."""
    F = pt.field
    n_e, n_o = pt.n_e, pt.n_o
    X, Y, Xp, Yp = pt.X, pt.Y, pt.Xp, pt.Yp
    R = pt.residual()
    shapes = [("X", n_e, n_o), ("Y", n_e, n_o), ("Xp", n_o, n_e), ("Yp", n_o, n_e)]
    directions = [(name, i, j) for name, r, c in shapes for i in range(r) for j in range(c)]

    def unit(r, c, i, j):
        return Matrix(F, [[1 if (a, b) == (i, j) else 0 for b in range(c)] for a in range(r)], c)

    dZ, dR = [], []
    for name, i, j in directions:
        zero_ee, zero_oo = Matrix.zeros(F, n_e, n_o), Matrix.zeros(F, n_o, n_e)
        d = {"X": zero_ee, "Y": zero_ee, "Xp": zero_oo, "Yp": zero_oo}
        r, c = (n_e, n_o) if name in ("X", "Y") else (n_o, n_e)
        d[name] = unit(r, c, i, j)
        dZ.append(d["Yp"] @ X + Yp @ d["X"] - d["Xp"] @ Y - Xp @ d["Y"])
        dR.append(d["Y"] @ Xp + Y @ d["Xp"] - d["X"] @ Yp - X @ d["Yp"])

    rows = []
    for a in range(n_o):
        for b in range(n_o):
            rows.append([D[a, b] for D in dZ])
    mul, sub = F.mul, F.sub
    for (i, k) in combinations(range(n_e), 2):
        for (j, l) in combinations(range(n_e), 2):
            # d(R_ij R_kl - R_il R_kj)
            rows.append([
                sub(
                    F.add(mul(D[i, j], R[k, l]), mul(R[i, j], D[k, l])),
                    F.add(mul(D[i, l], R[k, j]), mul(R[i, l], D[k, j])),
                )
                for D in dR
            ])
    return rows


def tangent_dim(pt: ModuliPoint) -> int:
    """Dimension of the Zariski tangent space of the variety at ``pt``.

    The minors cut out the rank condition scheme-theoretically only away
    from rank zero, so the residual must have rank exactly one when ``n_e >= 2``.
    """
    if not membership(pt.X, pt.Y, pt.Xp, pt.Yp):
        raise ValueError("point is not on the variety")
    if pt.n_e >= 2 and pt.residual().rank() != 1:
        raise ValueError("residual of rank zero: the 2x2 minors are singular there")
    n_vars = 4 * pt.n_e * pt.n_o
    rows = _jacobian_rows(pt)
    if not rows:
        return n_vars
    return n_vars - Matrix(pt.field, rows, n_vars).rank()
