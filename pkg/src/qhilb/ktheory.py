"""Grothendieck group of the quadric-like noncommutative surface.

K_0 is free of rank four.  Two bases are used:

* the *shift basis* ``[O], [O(-1)], [O(-2)], [O(-3)]``, in which a class is
  read off from a characteristic polynomial by reducing modulo
  ``(1 - t)^2 (1 - t^2)``;
* the *geometric basis* ``[O], [S], [Q], [P]`` (structure sheaf, line, conic,
  point), in which classes are written ``(r, a, b, c)``.

A class of a rank-one torsion-free module is *normalized* when
``r = 1`` and ``a = -2b``; such a class carries the invariants
``(n_e, n_o) = (b - c, -c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .castelnuovo import InvariantPair
from .fields import QQ
from .linalg import Matrix
from .series import ONE_MINUS_T, ONE_MINUS_T2, LaurentPoly


@dataclass(frozen=True)
class K0Class:
    """``r[O] + a[S] + b[Q] + c[P]``."""

    r: int
    a: int
    b: int
    c: int

    def __add__(self, other):
        return K0Class(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return K0Class(*(x - y for x, y in zip(self, other)))

    def __neg__(self):
        return K0Class(-self.r, -self.a, -self.b, -self.c)

    def __rmul__(self, n: int):
        return K0Class(*(n * x for x in self))

    def __iter__(self):
        return iter((self.r, self.a, self.b, self.c))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return tuple(self)


O = K0Class(1, 0, 0, 0)
S = K0Class(0, 1, 0, 0)
Q = K0Class(0, 0, 1, 0)
P = K0Class(0, 0, 0, 1)

# Columns are images of basis vectors; rows of the Euler matrices index the
# first argument.
SHIFT_IN_SHIFT_BASIS = ((2, 1, 0, 0), (0, 0, 1, 0), (-2, 0, 0, 1), (1, 0, 0, 0))
EULER_IN_SHIFT_BASIS = ((1, 0, 0, 0), (2, 1, 0, 0), (4, 2, 1, 0), (6, 4, 2, 1))
SHIFT_IN_GEOMETRIC_BASIS = ((1, 0, 0, 0), (-1, -1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1))
EULER_IN_GEOMETRIC_BASIS = ((1, 1, 1, 1), (-1, 0, -1, 0), (-3, -1, -2, 0), (1, 0, 0, 0))

# Shift-basis coordinates of O, S, Q, P as columns: 1, 1 - t, 1 - t^2, (1 - t)(1 - t^2).
GEOMETRIC_TO_SHIFT = ((1, 1, 1, 1), (0, -1, 0, -1), (0, 0, -1, -1), (0, 0, 0, 1))


@dataclass(frozen=True)
class K0Matrices:
    shift_B: Matrix
    euler_B: Matrix
    shift_Bp: Matrix
    euler_Bp: Matrix
    change_of_basis: Matrix
    unshift_Bp: Matrix


@lru_cache(maxsize=None)
def matrices() -> K0Matrices:
    """The shift and Euler-form matrices in both bases, cross-checked by change of basis."""
    sh_B, chi_B = Matrix(QQ, SHIFT_IN_SHIFT_BASIS), Matrix(QQ, EULER_IN_SHIFT_BASIS)
    sh_Bp, chi_Bp = Matrix(QQ, SHIFT_IN_GEOMETRIC_BASIS), Matrix(QQ, EULER_IN_GEOMETRIC_BASIS)
    P_ = Matrix(QQ, GEOMETRIC_TO_SHIFT)
    if P_.inverse() @ sh_B @ P_ != sh_Bp:
        raise AssertionError("shift matrices disagree under change of basis")
    if P_.T @ chi_B @ P_ != chi_Bp:
        raise AssertionError("Euler matrices disagree under change of basis")
    return K0Matrices(sh_B, chi_B, sh_Bp, chi_Bp, P_, sh_Bp.inverse())


def to_shift_basis(x: K0Class) -> tuple[int, ...]:
    return tuple(sum(GEOMETRIC_TO_SHIFT[i][j] * v for j, v in enumerate(x)) for i in range(4))


def from_shift_basis(coords) -> K0Class:
    inv = matrices().change_of_basis.inverse()
    vals = inv @ Matrix.column(QQ, coords)
    return K0Class(*(int(v) for v in vals.entries()))


def euler_chi(x: K0Class, y: K0Class) -> int:
    """``chi(x, y) = x^T M y`` with the geometric-basis Euler matrix."""
    M = EULER_IN_GEOMETRIC_BASIS
    return sum(x_i * M[i][j] * y_j for i, x_i in enumerate(x) for j, y_j in enumerate(y))


def shift(x: K0Class, d: int) -> K0Class:
    """Class of ``M(d)`` from the class of ``M``."""
    r, a, b, c = x
    if d % 2 == 0:
        l = d // 2
        return K0Class(r, a, l * r + b, l * ((l + 1) * r + a + 2 * b) + c)
    l = (d + 1) // 2
    return K0Class(r, -(r + a), l * r + a + b, l * (l * r + a + 2 * b) - b + c)


def shift_by_matrix(x: K0Class, d: int) -> K0Class:
    """Same as :func:`shift`, by repeated application of the shift matrix."""
    rows = _integer_shift(d >= 0)
    v = tuple(x)
    for _ in range(abs(d)):
        v = tuple(sum(a * b for a, b in zip(row, v)) for row in rows)
    return K0Class(*v)


@lru_cache(maxsize=None)
def _integer_shift(forward: bool) -> tuple[tuple[int, ...], ...]:
    m = matrices()
    M = m.shift_Bp if forward else m.unshift_Bp
    if any(v.denominator != 1 for v in M.entries()):
        raise AssertionError("the shift matrix is not unimodular")
    return tuple(tuple(int(v) for v in row) for row in M.rows)


def from_char_poly(q: LaurentPoly) -> K0Class:
    """Class of a module with characteristic polynomial ``q``."""
    r = q(1)
    a = (q(-1) - r) // 2  # q(-1) - q(1) is minus twice the odd coefficients
    g = (q - r - a * ONE_MINUS_T).divide_exact(ONE_MINUS_T2)
    b = g(1)
    c = (g - b).divide_exact(ONE_MINUS_T)(1)
    return K0Class(r, a, b, c)


def to_char_poly(x: K0Class) -> LaurentPoly:
    """Representative ``r + a(1-t) + b(1-t^2) + c(1-t)(1-t^2)``."""
    r, a, b, c = x
    return r + a * ONE_MINUS_T + b * ONE_MINUS_T2 + c * (ONE_MINUS_T * ONE_MINUS_T2)


def from_resolution(table) -> K0Class:
    """Class of the cokernel of a free resolution given as a Betti table."""
    return from_char_poly(table.char_poly())


def is_normalized(x: K0Class) -> bool:
    return x.r == 1 and x.a == -2 * x.b


def invariants(x: K0Class) -> InvariantPair:
    if not is_normalized(x):
        raise ValueError(f"{x} is not normalized (need r = 1 and a = -2b)")
    return InvariantPair(x.b - x.c, -x.c)


def class_of_invariants(n_e: int, n_o: int) -> K0Class:
    """Normalized class with the given invariants."""
    b = n_e - n_o
    return K0Class(1, -2 * b, b, -n_o)


def normalize(x: K0Class) -> tuple[int, K0Class]:
    """The unique twist ``d`` with ``x(d)`` normalized, and that class."""
    if x.r != 1:
        raise ValueError(f"only rank-one classes can be normalized, got rank {x.r}")
    if x.a % 2 == 0:
        d = 2 * (-x.a // 2 - x.b)
    else:
        d = 2 * ((1 + x.a) // 2 - x.a - x.b) - 1
    y = shift(x, d)
    assert is_normalized(y), (x, d, y)
    return d, y


def cohomology_dims(n_e: int, n_o: int) -> tuple[int, int, int, int]:
    """``h^1(I), h^1(I(-1)), h^1(I(-2)), h^1(I(-3))`` for a normalized ``I``."""
    if (n_e, n_o) == (0, 0) or n_e - (n_e - n_o) ** 2 < 0 or n_o < 0:
        raise ValueError(f"({n_e}, {n_o}) is not a nonzero admissible weight")
    return (n_e - 1, n_o, n_e, n_o)


def chi_O_shift(n_e: int, n_o: int, l: int) -> int:
    """``chi(O, I(l))`` for a normalized ``I`` with invariants ``(n_e, n_o)``."""
    if l % 2 == 0:
        return (l + 2) ** 2 // 4 - n_e
    return (l + 1) * (l + 3) // 4 - n_o


def ext1_selfdim(n_e: int, n_o: int) -> int:
    """``dim Ext^1(I, I) = 2(n_e - (n_e - n_o)^2)``."""
    return 2 * (n_e - (n_e - n_o) ** 2)


def self_chi(x: K0Class) -> int:
    return euler_chi(x, x)


def restriction_data(x: K0Class) -> tuple[int, int]:
    """Rank and degree of the restriction to the curve at infinity: ``(r, 2a + 4b)``."""
    return x.r, 2 * x.a + 4 * x.b


# line bundles on the quadric


def line_bundle_class(m: int, n: int) -> K0Class:
    """``[O(m, n)] = [O] + (m - n)[S] + n[Q] + n(m + 1)[P]``."""
    return K0Class(1, m - n, n, n * (m + 1))


def linear_normal_form(m: int, n: int) -> int:
    """``u`` with ``O(m, n)(-m - n) = O(u, -u)`` up to normalization."""
    return (m - n) // 2 if (m - n) % 2 == 0 else (n - m - 1) // 2


def linear_invariants(u: int) -> InvariantPair:
    return InvariantPair(u * u, u * (u + 1))


def linear_resolution_exponent(m: int, n: int) -> int:
    """Exponent ``c`` of the resolution ``0 -> A(-c-1)^c -> A(-c)^(c+1)``."""
    return m - n if m >= n else n - m - 1


@dataclass(frozen=True)
class LineBundleMN:
    """The line bundle ``O(m, n)`` on the commutative quadric."""

    m: int
    n: int

    @property
    def k0_class(self) -> K0Class:
        return line_bundle_class(self.m, self.n)


def linear_normalize(mn: LineBundleMN) -> tuple[int, int, InvariantPair]:
    """Twist ``d = -m - n``, the ``u`` of ``O(u, -u)``, and its invariants."""
    u = linear_normal_form(mn.m, mn.n)
    return -mn.m - mn.n, u, linear_invariants(u)
