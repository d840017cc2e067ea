"""Representations of the four-vertex quiver with cubic relations and its three-vertex part.

Vertices are labelled ``-3, -2, -1, 0``; between consecutive vertices run
two arrows ``X_i, Y_i : V_i -> V_(i+1)``.  The full quiver carries the two
relations of the algebra (see :func:`qhilb.ncalgebra.relation_matrix`);
dropping vertex ``0`` leaves a hereditary quiver with three vertices.

Throughout, ``X, Y, X', Y', X'', Y''`` stand for the arrows leaving vertices
``-3, -2, -1`` respectively, and a matrix acts on column vectors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .castelnuovo import in_N
from .errors import BudgetExceeded
from .fields import Field, PrimeField, field_from_tag
from .linalg import Matrix
from .ncalgebra import AlgebraSpec, relation_matrix

ARROW_NAMES = ("X-3", "Y-3", "X-2", "Y-2", "X-1", "Y-1")

EULER_FORM = ((1, -2, 0, 2), (0, 1, -2, 0), (0, 0, 1, -2), (0, 0, 0, 1))


class _Rep:
    """Shared plumbing: ``dims`` per vertex and two arrows per consecutive pair."""

    field: Field
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def _check(self):
        if len(self.maps) != 2 * (len(self.dims) - 1):
            raise ValueError(f"expected {2 * (len(self.dims) - 1)} arrow matrices, got {len(self.maps)}")
        for k, M in enumerate(self.maps):
            src, tgt = self.dims[k // 2], self.dims[k // 2 + 1]
            if M.shape != (tgt, src):
                raise ValueError(f"arrow {ARROW_NAMES[k]} should be {tgt}x{src}, got {M.shape[0]}x{M.shape[1]}")
            if M.field != self.field:
                raise ValueError(f"arrow {ARROW_NAMES[k]} is over {M.field!r}, not {self.field!r}")

    def arrows(self):
        """``(source index, target index, matrix)`` for each arrow."""
        return [(k // 2, k // 2 + 1, M) for k, M in enumerate(self.maps)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def to_json(self) -> dict:
        return {
            "field": self.field.tag,
            "dims": list(self.dims),
            "maps": {ARROW_NAMES[k]: M.to_strings() for k, M in enumerate(self.maps)},
        }

    @classmethod
    def from_json(cls, obj: dict):
        if not isinstance(obj, dict):
            raise ValueError("a representation is a JSON object")
        try:
            field = field_from_tag(obj.get("field", "q"))
            dims = tuple(int(d) for d in obj["dims"])
            maps = []
            for k in range(2 * (len(dims) - 1)):
                rows = obj["maps"][ARROW_NAMES[k]]
                maps.append(Matrix(field, [[field.parse(str(x)) for x in r] for r in rows], dims[k // 2]))
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed representation: {exc!r}") from None
        return cls(field, dims, tuple(maps))


@dataclass(frozen=True)
class QuiverRep(_Rep):
    """Representation of the four-vertex quiver; maps ordered as ``ARROW_NAMES``."""

    field: Field
    dims: tuple[int, int, int, int]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.dims) != 4:
            raise ValueError("a representation of the full quiver has four vertices")
        self._check()

    def restrict(self) -> "QuiverRep0":
        return QuiverRep0(self.field, self.dims[:3], self.maps[:4])


@dataclass(frozen=True)
class QuiverRep0(_Rep):
    """Representation of the three-vertex quiver; maps ``X, Y, X', Y'``."""

    field: Field
    dims: tuple[int, int, int]
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.dims) != 3:
            raise ValueError("a representation of the three-vertex quiver has three vertices")
        self._check()

    @classmethod
    def from_matrices(cls, X: Matrix, Y: Matrix, Xp: Matrix, Yp: Matrix) -> "QuiverRep0":
        return cls(X.field, (X.ncols, X.nrows, Xp.nrows), (X, Y, Xp, Yp))


def res(rep: QuiverRep) -> QuiverRep0:
    return rep.restrict()


def relation_block(rep: _Rep, spec: AlgebraSpec) -> Matrix:
    X, Y, Xp, Yp = rep.maps[:4]
    return relation_matrix(spec, X, Y, Xp, Yp)


def check_relations(rep: QuiverRep, spec: AlgebraSpec) -> bool:
    """Whether ``(X'' Y'') B = 0``."""
    Xpp, Ypp = rep.maps[4], rep.maps[5]
    return (Xpp.hstack(Ypp) @ relation_block(rep, spec)).is_zero()


def ind(F: QuiverRep0, spec: AlgebraSpec) -> QuiverRep:
    """Extend to the full quiver with ``V_0 = coker B`` and the universal ``X'', Y''``.

    The projection onto the cokernel is the reduced echelon basis of the left
    kernel of ``B``, split into its two column blocks.
    """
    B = relation_block(F, spec)
    N = B.left_nullspace()
    n1 = F.dims[2]
    Xpp = N.submatrix(range(N.nrows), range(n1))
    Ypp = N.submatrix(range(N.nrows), range(n1, 2 * n1))
    return QuiverRep(F.field, (*F.dims, N.nrows), (*F.maps, Xpp, Ypp))


def is_induced(M: QuiverRep, spec: AlgebraSpec) -> bool:
    """Whether ``M`` is isomorphic to ``ind(res(M))``, i.e. ``(X'' Y'')`` is a cokernel of ``B``."""
    B = relation_block(M, spec)
    P = M.maps[4].hstack(M.maps[5])
    return (P @ B).is_zero() and P.rank() == M.dims[3] and B.rank() == P.ncols - M.dims[3]


# homomorphisms and the Euler form


def hom_dim(F: _Rep, G: _Rep) -> int:
    """Dimension of the space of morphisms ``F -> G``."""
    if type(F) is not type(G) or F.field != G.field:
        raise ValueError("representations must live on the same quiver and field")
    field = F.field
    offsets, n = [], 0
    for f, g in zip(F.dims, G.dims):
        offsets.append(n)
        n += f * g

    def var(v, i, j):  # entry (i, j) of phi_v : F_v -> G_v
        return offsets[v] + i * F.dims[v] + j

    rows = []
    for (s, t, Fa), (_, _, Ga) in zip(F.arrows(), G.arrows()):
        for i in range(G.dims[t]):
            for j in range(F.dims[s]):
                row = [field.zero] * n
                for k in range(G.dims[s]):
                    row[var(s, k, j)] = field.add(row[var(s, k, j)], Ga[i, k])
                for k in range(F.dims[t]):
                    row[var(t, i, k)] = field.sub(row[var(t, i, k)], Fa[k, j])
                rows.append(row)
    if not rows:
        return n
    return n - Matrix(field, rows, n).rank()


def chi_gamma(d1: Sequence[int], d2: Sequence[int]) -> int:
    """Euler form on dimension vectors; three-vertex vectors use the hereditary block."""
    if len(d1) != len(d2) or len(d1) not in (3, 4):
        raise ValueError("dimension vectors must both have three or four entries")
    return sum(d1[i] * EULER_FORM[i][j] * d2[j] for i in range(len(d1)) for j in range(len(d2)))


def ext1_dim_gamma0(F: QuiverRep0, G: QuiverRep0) -> int:
    return hom_dim(F, G) - chi_gamma(F.dims, G.dims)


# descriptions of the moduli spaces


def z_maps(rep: _Rep) -> tuple[Matrix, Matrix | None]:
    """``Z_-3 = Y'X - X'Y`` and, on the full quiver, ``Z_-2 = Y''X' - X''Y'``."""
    X, Y, Xp, Yp = rep.maps[:4]
    Z3 = Yp @ X - Xp @ Y
    if len(rep.maps) == 4:
        return Z3, None
    Xpp, Ypp = rep.maps[4], rep.maps[5]
    return Z3, Ypp @ Xp - Xpp @ Yp


def membership_C_Hc(M: QuiverRep, spec: AlgebraSpec | None = None) -> bool:
    """Dimension vector ``(n_o, n_e, n_o, n_e - 1)``, ``Z_-3`` invertible, ``Z_-2`` onto, relations."""
    spec = spec or AlgebraSpec.hc()
    n_o, n_e, n_o2, top = M.dims
    if n_o2 != n_o or top != n_e - 1 or not in_N(n_e, n_o) or n_e == 0:
        return False
    Z3, Z2 = z_maps(M)
    return Z3.is_invertible() and Z2.rank() == top and check_relations(M, spec)


def residual(F: _Rep) -> Matrix:
    """``Y Z^-1 X' - X Z^-1 Y' - I`` for invertible ``Z = Y'X - X'Y``."""
    X, Y, Xp, Yp = F.maps[:4]
    Zinv = z_maps(F)[0].inverse()
    return Y @ Zinv @ Xp - X @ Zinv @ Yp - Matrix.identity(F.field, F.dims[1])


def membership_D_Hc(F: QuiverRep0) -> bool:
    """``Z`` invertible and ``rank(Y Z^-1 X' - X Z^-1 Y' - I) <= 1``."""
    n_o, n_e, n_o2 = F.dims
    if n_o2 != n_o or n_e == 0:
        return False
    if not z_maps(F)[0].is_invertible():
        return False
    return residual(F).rank() <= 1


def rank_condition_typeA(F: QuiverRep0, spec: AlgebraSpec) -> bool:
    """``rank B <= 2 n_o - (n_e - 1)``, equivalently ``dim (ind F)_0 >= n_e - 1``."""
    n_o, n_e, _ = F.dims
    return relation_block(F, spec).rank() <= 2 * n_o - (n_e - 1)


# stability


class Stability(enum.Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    UNSTABLE = "unstable"


THETA = (-1, 0, 1)
STABILITY_MAX_P = 5
STABILITY_MAX_DIM = 7


def subspaces(field: PrimeField, n: int):
    """Every subspace of ``F_p^n`` as a matrix whose rows are an echelon basis."""
    p = field.p
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                yield Matrix(field, rows, n)


def _contains(U: Matrix, vectors: Matrix) -> bool:
    """Whether the row space of ``U`` contains the rows of ``vectors``."""
    if vectors.nrows == 0:
        return True
    return U.vstack(vectors).rank() == U.nrows


def theta_stable_bruteforce(F: QuiverRep0, theta: Sequence[int] = THETA) -> Stability:
    """Classify by listing every subrepresentation over a small prime field.

    For each pair ``(U_-3, U_-2)`` closed under ``X, Y``, the smallest
    admissible ``U_-1`` is the image of ``U_-2`` under ``X', Y'``; since the
    third weight is positive that choice minimizes ``theta`` for the pair.
    """
    field = F.field
    if not isinstance(field, PrimeField) or field.p > STABILITY_MAX_P:
        raise BudgetExceeded(f"subrepresentation enumeration needs a prime field with p <= {STABILITY_MAX_P}")
    if F.total_dim > STABILITY_MAX_DIM:
        raise BudgetExceeded(f"total dimension {F.total_dim} exceeds {STABILITY_MAX_DIM}")
    if sum(t * d for t, d in zip(theta, F.dims)) != 0:
        raise ValueError(f"theta {tuple(theta)} does not vanish on {F.dims}")
    X, Y, Xp, Yp = F.maps
    n3, n2, n1 = F.dims
    worst = None
    middle = list(subspaces(field, n2))
    for U3 in subspaces(field, n3):
        images = (X @ U3.T).T.vstack((Y @ U3.T).T) if U3.nrows else Matrix.zeros(field, 0, n2)
        for U2 in middle:
            if not _contains(U2, images):
                continue
            img1 = (Xp @ U2.T).T.vstack((Yp @ U2.T).T) if U2.nrows else Matrix.zeros(field, 0, n1)
            d1 = img1.rank()
            dims = (U3.nrows, U2.nrows, d1)
            if dims == (0, 0, 0) or dims == F.dims:
                continue  # zero, or the whole representation
            value = sum(t * d for t, d in zip(theta, dims))
            worst = value if worst is None else min(worst, value)
    if worst is None or worst > 0:
        return Stability.STABLE
    return Stability.SEMISTABLE if worst == 0 else Stability.UNSTABLE
