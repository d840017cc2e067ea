"""Dense matrices over an exact field, with row reduction.

Matrices are immutable and carry their shape explicitly so that empty
matrices (zero rows or zero columns) compose correctly.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .fields import QQ, Field


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _raw(cls, field, rows, ncols):
        m = cls.__new__(cls)
        m.field, m.rows, m.nrows, m.ncols = field, tuple(rows), len(rows), ncols
        return m

    @classmethod
    def zeros(cls, field, m, n):
        return cls._raw(field, [(field.zero,) * n for _ in range(m)], n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, [tuple(o if i == j else z for j in range(n)) for i in range(n)], n)

    @classmethod
    def random(cls, field, m, n, rng: random.Random):
        return cls._raw(field, [tuple(field.random_element(rng) for _ in range(n)) for _ in range(m)], n)

    @classmethod
    def column(cls, field, values):
        return cls(field, [[v] for v in values], 1)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix from a grid of compatible matrices."""
        field = blocks[0][0].field
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append(sum((b.rows[i] for b in brow), ()))
        return cls._raw(field, rows, sum(b.ncols for b in blocks[0]))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r}: [{body}])"

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix._raw(
            self.field,
            [tuple(add(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix._raw(
            self.field,
            [tuple(sub(x, y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c):
        F = self.field
        c = F(c)
        return Matrix._raw(F, [tuple(F.mul(c, x) for x in r) for r in self.rows], self.ncols)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        zero = F.zero
        out = []
        if F.characteristic:
            p = F.characteristic
            for r in self.rows:
                out.append(tuple(sum(x * y for x, y in zip(r, c)) % p for c in cols))
        else:
            for r in self.rows:
                out.append(tuple(sum((x * y for x, y in zip(r, c)), zero) for c in cols))
        return Matrix._raw(F, out, other.ncols)

    @property
    def T(self):
        if not self.nrows:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix._raw(self.field, list(zip(*self.rows)), self.nrows)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for r in self.rows for x in r)

    def entries(self):
        return [x for r in self.rows for x in r]

    def hstack(self, other):
        return Matrix.block([[self, other]])

    def vstack(self, other):
        return Matrix.block([[self], [other]])

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return Matrix._raw(self.field, [tuple(self.rows[i][j] for j in cols) for i in rows], len(cols))

    def to_strings(self):
        return [[self.field.to_str(x) for x in r] for r in self.rows]

    # row reduction

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        F = self.field
        A = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            piv = next((i for i in range(r, self.nrows) if not F.is_zero(A[i][c])), None)
            if piv is None:
                continue
            A[r], A[piv] = A[piv], A[r]
            inv = F.inv(A[r][c])
            A[r] = [F.mul(inv, x) for x in A[r]]
            for i in range(self.nrows):
                if i != r and not F.is_zero(A[i][c]):
                    f = A[i][c]
                    A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
        return Matrix._raw(F, [tuple(row) for row in A], self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list]:
        """Basis of the right kernel, one vector per free column."""
        F = self.field
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [F.zero] * self.ncols
            v[f] = F.one
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][f])
            basis.append(v)
        return basis

    def left_nullspace(self) -> "Matrix":
        """Rows spanning ``{y : y A = 0}``, in reduced echelon form."""
        basis = self.T.nullspace()
        if not basis:
            return Matrix.zeros(self.field, 0, self.nrows)
        return Matrix(self.field, basis).rref()[0]

    def solve(self, b: Sequence):
        """One solution of ``A x = b`` plus a kernel basis, or ``None``."""
        F = self.field
        aug = Matrix._raw(F, [r + (F(bi),) for r, bi in zip(self.rows, b)], self.ncols + 1)
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [F.zero] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = R.rows[i][-1]
        return x, self.nullspace()

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        n = self.nrows
        R, pivots = self.hstack(Matrix.identity(self.field, n)).rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def mat(rows, field: Field = QQ, ncols: int | None = None) -> Matrix:
    """Shorthand constructor defaulting to the rationals."""
    return Matrix(field, rows, ncols)
