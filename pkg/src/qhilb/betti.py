"""Betti tables of two-term free resolutions ``0 -> ⊕A(-i)^b_i -> ⊕A(-i)^a_i -> I -> 0``.

A table is admissible for a normalized ideal when nothing is killed at or
below the first generator degree ``sigma`` and, above it, the relations in
degrees ``<= l`` are strictly outnumbered by the generators in degrees
``< l``.  Writing ``q = sum (a_i - b_i) t^i``, that condition reads
``b_l < q_0 + ... + q_(l-1)`` one degree at a time, which is what makes
enumeration cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .castelnuovo import extremal_castelnuovo, n_membership
from .series import LaurentPoly, TruncatedSeries


class BettiError(ValueError):
    pass


@dataclass(frozen=True)
class BettiTable:
    a: tuple[tuple[int, int], ...]
    b: tuple[tuple[int, int], ...]

    @property
    def a_map(self) -> dict[int, int]:
        return dict(self.a)

    @property
    def b_map(self) -> dict[int, int]:
        return dict(self.b)

    @property
    def sigma(self) -> int:
        return self.a[0][0]

    def char_poly(self) -> LaurentPoly:
        q = LaurentPoly(self.a_map)
        return q - LaurentPoly(self.b_map)

    @property
    def size(self) -> int:
        return sum(n for _, n in self.a) + sum(n for _, n in self.b)

    def to_json(self) -> dict:
        return {
            "a": {str(d): n for d, n in self.a},
            "b": {str(d): n for d, n in self.b},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "BettiTable":
        try:
            a = {int(d): int(n) for d, n in obj["a"].items()}
            b = {int(d): int(n) for d, n in obj["b"].items()}
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise BettiError(f"malformed Betti table {obj!r}: {exc}") from None
        return validate(a, b)

    def __str__(self):
        return format_resolution(self)


def _clean(m: Mapping[int, int], name: str) -> tuple[tuple[int, int], ...]:
    out = []
    for d, n in sorted(m.items()):
        if n < 0:
            raise BettiError(f"negative Betti number {name}_{d} = {n}")
        if n:
            out.append((int(d), int(n)))
    return tuple(out)


def validate(a: Mapping[int, int], b: Mapping[int, int]) -> BettiTable:
    """Check the admissibility conditions and return a canonical table."""
    a_, b_ = _clean(a, "a"), _clean(b, "b")
    if not a_:
        raise BettiError("no generators")
    sigma = a_[0][0]
    if b_ and b_[0][0] <= sigma:
        raise BettiError(f"relation in degree {b_[0][0]} at or below the first generator degree {sigma}")
    am, bm = dict(a_), dict(b_)
    top = max(d for d, _ in a_ + b_)
    gens = rels = 0
    for l in range(sigma + 1, top + 2):
        gens += am.get(l - 1, 0)
        rels += bm.get(l, 0)
        if rels >= gens:
            raise BettiError(
                f"degree {l}: {rels} relations in degrees <= {l} but only {gens} generators below"
            )
    return BettiTable(a_, b_)


def enumerate_for(q: LaurentPoly, degree_bound: int | None = None) -> list[BettiTable]:
    """All admissible tables whose characteristic polynomial is ``q``.

    Each degree ``l`` above ``sigma`` may carry ``x`` extra canceling pairs
    ``A(-l)`` in both terms as long as ``max(-q_l, 0) + x < q_0 + ... + q_(l-1)``.
    Beyond the top degree of ``q`` the bound is ``rank - 1``, so for rank one
    the default ``degree_bound = deg q`` is exhaustive; higher rank needs an
    explicit bound.
    """
    if q.is_zero():
        return []
    sigma, top = q.min_degree, q.max_degree
    if q.coeff(sigma) <= 0:
        return []
    r = q(1)
    if degree_bound is None:
        if r > 1:
            raise BettiError("rank >= 2 admits canceling pairs in every degree; pass degree_bound")
        degree_bound = top
    degree_bound = max(degree_bound, top)

    base_a = {d: max(c, 0) for d, c in q.terms.items()}
    base_b = {d: max(-c, 0) for d, c in q.terms.items()}
    ranges = []
    partial = q.coeff(sigma)
    for l in range(sigma + 1, degree_bound + 1):
        room = partial - base_b.get(l, 0)
        if room <= 0:
            return []
        ranges.append(range(room))
        partial += q.coeff(l)
    if partial <= 0:
        return []

    tables = []
    for extras in product(*ranges):
        a, b = dict(base_a), dict(base_b)
        for l, x in zip(range(sigma + 1, degree_bound + 1), extras):
            if x:
                a[l] = a.get(l, 0) + x
                b[l] = b.get(l, 0) + x
        tables.append(validate(a, b))
    return sorted(tables, key=lambda t: (t.size, t.a, t.b))


def extremal_resolution(n_e: int, n_o: int) -> BettiTable:
    """``0 -> A(-c-1)^c -> A(-c)^(c+1)`` with ``c`` the boundary exponent of ``(n_e, n_o)``."""
    member = n_membership(n_e, n_o)
    if member is None:
        raise BettiError(f"({n_e}, {n_o}) is outside the admissible set")
    c = extremal_castelnuovo(member.k, member.case).sigma
    if c == 0:
        return validate({0: 1}, {})
    return validate({c: c + 1}, {c + 1: c})


def ext1_graded_dim(table: BettiTable, h: TruncatedSeries) -> int:
    """``1 - sum_i (a_i - b_i) h_i`` where ``h`` is the Hilbert series of the module itself."""
    q = table.char_poly()
    return 1 - sum(c * h.coeff(d) for d, c in q.terms.items())


def format_resolution(table: BettiTable, arrow: str = "→") -> str:
    """Human-readable form such as ``A(-3)⊕A(-4) → A(-2)^2⊕A(-3)``."""

    def term(entries):
        if not entries:
            return "0"
        return "⊕".join(f"A({-d})" + (f"^{n}" if n > 1 else "") for d, n in entries)

    if not table.b:
        return term(table.a)
    return f"{term(table.b)} {arrow} {term(table.a)}"
