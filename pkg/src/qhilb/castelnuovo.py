"""Castelnuovo polynomials, their weights, and the partitions they encode.

A Castelnuovo polynomial is a coefficient list that climbs the staircase
``1, 2, ..., sigma`` and then never increases again.  Reading the
coefficients as column heights, the even and odd columns give the two
weights ``(n_e, n_o)``; reading the rows instead gives a partition into
distinct parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .series import ONE_MINUS_T, LaurentPoly, TruncatedSeries, hA_coefficient


class InvariantPair(NamedTuple):
    n_e: int
    n_o: int


class CastelnuovoError(ValueError):
    """Raised for a coefficient list that is not a Castelnuovo polynomial.

    ``index`` is the first coefficient that breaks the shape.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class CastelnuovoPoly:
    coeffs: tuple[int, ...]

    @property
    def sigma(self) -> int:
        """Length of the initial staircase ``1, 2, ..., sigma``."""
        return _staircase_length(self.coeffs)

    @property
    def weights(self) -> InvariantPair:
        return InvariantPair(sum(self.coeffs[0::2]), sum(self.coeffs[1::2]))

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self.coeffs)

    def char_poly(self) -> LaurentPoly:
        """``1 - s(t) (1 - t)^2``."""
        return 1 - self.to_laurent() * ONE_MINUS_T * ONE_MINUS_T

    def __str__(self):
        return str(self.to_laurent())


def _staircase_length(coeffs: Sequence[int]) -> int:
    sigma = 0
    while sigma < len(coeffs) and coeffs[sigma] == sigma + 1:
        sigma += 1
    return sigma


def validate(coeffs: Sequence[int]) -> CastelnuovoPoly:
    """Check the staircase-then-nonincreasing shape; trailing zeros are stripped."""
    s = [int(c) for c in coeffs]
    while s and s[-1] == 0:
        s.pop()
    for i, c in enumerate(s):
        if c < 0:
            raise CastelnuovoError(f"negative coefficient {c} at index {i}", i)
    sigma = _staircase_length(s)
    prev = sigma  # coefficient just before the tail; zero for an empty staircase
    for i in range(sigma, len(s)):
        if s[i] > prev:
            raise CastelnuovoError(
                f"coefficient {s[i]} at index {i} exceeds the previous value {prev}", i
            )
        prev = s[i]
    return CastelnuovoPoly(tuple(s))


def weights(s: CastelnuovoPoly) -> InvariantPair:
    return s.weights


def enumerate_polys(n_e: int, n_o: int) -> list[CastelnuovoPoly]:
    """All Castelnuovo polynomials of weight ``(n_e, n_o)``, lexicographically ordered."""
    if n_e < 0 or n_o < 0:
        return []
    found: list[tuple[int, ...]] = []

    def grow(prefix: list[int], rem: list[int], prev: int, on_stair: bool) -> None:
        if rem == [0, 0]:
            found.append(tuple(prefix))
            return
        i = len(prefix)
        budget = rem[i % 2]
        choices = set(range(1, min(prev, budget) + 1))
        if on_stair and i + 1 <= budget:
            choices.add(i + 1)
        for v in sorted(choices):
            rem[i % 2] -= v
            prefix.append(v)
            grow(prefix, rem, v, on_stair and v == i + 1)
            prefix.pop()
            rem[i % 2] += v

    grow([], [n_e, n_o], 0, True)
    return [CastelnuovoPoly(c) for c in sorted(found)]


def count(n_e: int, n_o: int) -> int:
    return len(enumerate_polys(n_e, n_o))


def to_hilbert(s: CastelnuovoPoly, order: int) -> TruncatedSeries:
    """``h_A - s / (1 - t^2)`` through ``t^order``."""
    coeffs = tuple(
        hA_coefficient(n) - sum(s.coeffs[j] for j in range(n % 2, min(n, len(s.coeffs) - 1) + 1, 2))
        for n in range(order + 1)
    )
    return TruncatedSeries(0, coeffs)


def from_char_poly(q: LaurentPoly) -> CastelnuovoPoly:
    """Invert ``q = 1 - s (1 - t)^2``."""
    s = (1 - q).divide_exact(ONE_MINUS_T * ONE_MINUS_T)
    if not s.is_zero() and s.min_degree < 0:
        raise CastelnuovoError(f"{s} has negative powers of t", 0)
    return validate(s.coeffs(0, s.max_degree) if not s.is_zero() else [])


# partitions and chess colourings


def to_partition(s: CastelnuovoPoly) -> tuple[int, ...]:
    """Row lengths of the column diagram, longest first."""
    top = max(s.coeffs, default=0)
    return tuple(sum(1 for c in s.coeffs if c >= j) for j in range(1, top + 1))


def from_partition(parts: Sequence[int]) -> CastelnuovoPoly:
    """Inverse of :func:`to_partition`: row ``j`` is shifted right by ``j`` cells."""
    parts = sorted((p for p in parts if p), reverse=True)
    if len(set(parts)) != len(parts):
        raise ValueError(f"parts of {parts} are not distinct")
    width = max((j + p for j, p in enumerate(parts)), default=0)
    heights = [sum(1 for j, p in enumerate(parts) if j <= i < j + p) for i in range(width)]
    return validate(heights)


def chess_weights(parts: Sequence[int]) -> InvariantPair:
    """Black and white cell counts of a left-justified diagram.

    Cell ``(row j, column i)`` is black when ``i + j`` is even; row ``0`` is the
    longest row.
    """
    black = white = 0
    for j, length in enumerate(sorted(parts, reverse=True)):
        b = (length + 1) // 2 if j % 2 == 0 else length // 2
        black += b
        white += length - b
    return InvariantPair(black, white)


def distinct_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into distinct parts, largest part first."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first - 1):
                yield (first, *rest)

    yield from rec(n, n)


# the set N of admissible weights


def in_N(n_e: int, n_o: int) -> bool:
    return n_e >= 0 and n_o >= 0 and n_e - (n_e - n_o) ** 2 >= 0


@dataclass(frozen=True)
class NMembership:
    """Position of a weight relative to the boundary of ``N``.

    The weight equals a boundary point plus ``(l, l)``; the boundary point is
    ``(k^2, k(k+1))`` when ``case == 1`` and ``((k+1)^2, k(k+1))`` when
    ``case == 2``.
    """

    k: int
    l: int
    case: int

    @property
    def exponent(self) -> int:
        """Staircase length ``2k`` or ``2k + 1`` of the extremal polynomial."""
        return 2 * self.k + (self.case - 1)


def n_membership(n_e: int, n_o: int) -> NMembership | None:
    if not in_N(n_e, n_o):
        return None
    d = n_e - n_o
    l = n_e - d * d
    if d <= 0:
        return NMembership(k=-d, l=l, case=1)
    return NMembership(k=d - 1, l=l, case=2)


def extremal_castelnuovo(k: int, case: int) -> CastelnuovoPoly:
    """The pure staircase ``1 + 2t + ... + c t^(c-1)`` with ``c = 2k`` or ``2k + 1``."""
    if case not in (1, 2) or k < 0:
        raise ValueError(f"bad boundary label k={k}, case={case}")
    c = 2 * k + (case - 1)
    return CastelnuovoPoly(tuple(range(1, c + 1)))


def diagram(s: CastelnuovoPoly, black: str = "#", white: str = ".") -> str:
    """Column chart with even columns drawn in ``black``."""
    top = max(s.coeffs, default=0)
    rows = []
    for h in range(top, 0, -1):
        rows.append(
            "".join((black if i % 2 == 0 else white) if c >= h else " " for i, c in enumerate(s.coeffs)).rstrip()
        )
    return "\n".join(rows)
