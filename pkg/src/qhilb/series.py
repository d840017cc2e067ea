"""Laurent polynomials and truncated Hilbert series over the integers.

The ambient algebra throughout is the three-dimensional Artin-Schelter
regular algebra generated in degree one by ``x, y`` with two cubic relations.
Its Hilbert series is ``1 / ((1 - t)^2 (1 - t^2))``; every graded module ``M``
considered here has a *characteristic polynomial* ``q`` with
``h_M = q * h_A``.

>>> q = LaurentPoly({1: 2, 2: -1})
>>> expand_over_hA(q, 4).coeffs
(0, 2, 3, 6, 8)
>>> gk_dim_and_multiplicity(LaurentPoly.from_coeffs([1, -1, -1, 1]))
(1, 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial stored as ``{degree: coefficient}``, zeros dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for d, c in (terms or {}).items():
            if c != int(c):
                raise ValueError(f"non-integer coefficient {c!r}")
            if c:
                clean[int(d)] = int(c)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> "LaurentPoly":
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPoly":
        return cls({degree: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, d: int) -> int:
        return self._terms.get(d, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def coeffs(self, start: int, stop: int) -> list[int]:
        """Coefficients of degrees ``start..stop`` inclusive."""
        return [self.coeff(d) for d in range(start, stop + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({d + k: c for d, c in self._terms.items()})

    def __call__(self, x):
        """Exact evaluation; ``x`` may be an ``int`` or ``Fraction``."""
        total = Fraction(0)
        for d, c in self._terms.items():
            total += c * Fraction(x) ** d
        return int(total) if total.denominator == 1 else total

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / divisor``; raises ``ValueError`` unless it is a Laurent polynomial."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._terms)
        lo_d, top_d = divisor.min_degree, divisor.max_degree
        lead = divisor.coeff(top_d)
        quot: dict[int, int] = {}
        floor = self.min_degree - lo_d
        while rem:
            top = max(rem)
            k = top - top_d
            if k < floor:
                break
            c, r = divmod(rem[top], lead)
            if r:
                break
            quot[k] = c
            for d, dc in divisor._terms.items():
                v = rem.get(d + k, 0) - c * dc
                if v:
                    rem[d + k] = v
                else:
                    rem.pop(d + k, None)
        if rem:
            raise ValueError(f"{self} is not divisible by {divisor}")
        return LaurentPoly(quot)

    def root_multiplicity_at_one(self) -> int:
        """Largest ``v`` with ``(1 - t)^v`` dividing ``self``."""
        if self.is_zero():
            raise ValueError("the zero polynomial vanishes to infinite order")
        v, p = 0, self
        while p(1) == 0:
            p = p.divide_exact(ONE_MINUS_T)
            v += 1
        return v

    def to_json(self) -> dict[str, str]:
        return {str(d): str(c) for d, c in self._terms.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str | int]) -> "LaurentPoly":
        try:
            return cls({int(d): int(c) for d, c in obj.items()})
        except (TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial {obj!r}: {exc}") from None

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse text such as ``"1 - t - t^2 + t^3"`` or ``"2t^2-t^(-1)"``."""
        s = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        term = re.compile(r"([+-]?)(\d*)(t(?:\^\(?(-?\d+)\)?)?)?")
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            deg = 0 if not m.group(3) else int(m.group(4)) if m.group(4) else 1
            out[deg] = out.get(deg, 0) + sign * coeff
            pos = m.end()
            if pos < len(s) and s[pos] not in "+-":
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        return cls(out)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in self._terms.items():
            mono = "" if d == 0 else "t" if d == 1 else f"t^{d}" if d > 0 else f"t^({d})"
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            parts.append(("-" if c < 0 else "+") + body)
        return _spaced(parts)


def _spaced(parts: list[str]) -> str:
    head = parts[0] if parts[0][0] == "-" else parts[0][1:]
    rest = [f" {p[0]} {p[1:]}" for p in parts[1:]]
    return head + "".join(rest)


ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})
ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})
ONE_MINUS_T2 = LaurentPoly({0: 1, 2: -1})
#: ``(1 - t)^2 (1 - t^2)``, the characteristic polynomial of the point module's base.
H_A_DENOMINATOR = ONE_MINUS_T * ONE_MINUS_T * ONE_MINUS_T2


def hA_coefficient(n: int) -> int:
    """``dim A_n``: ``(n+2)^2/4`` for even ``n``, ``(n+1)(n+3)/4`` for odd ``n``."""
    if n < 0:
        return 0
    return (n + 2) ** 2 // 4 if n % 2 == 0 else (n + 1) * (n + 3) // 4


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of degrees ``start..order`` of a power series."""

    start: int
    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.start + len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        if n < self.start:
            return 0
        if n > self.order:
            raise IndexError(f"degree {n} beyond truncation order {self.order}")
        return self.coeffs[n - self.start]

    def to_json(self) -> dict:
        return {"start": self.start, "coeffs": list(self.coeffs)}


def expand_over_hA(q: LaurentPoly, order: int) -> TruncatedSeries:
    """Coefficients of ``q * h_A`` through ``t^order``.

    The window starts at ``min(0, lowest degree of q)``.
    """
    start = min(0, q.min_degree) if not q.is_zero() else 0
    terms = q.terms
    coeffs = tuple(
        sum(c * hA_coefficient(n - d) for d, c in terms.items()) for n in range(start, order + 1)
    )
    return TruncatedSeries(start, coeffs)


def char_poly_of_series(h: TruncatedSeries) -> LaurentPoly:
    """Recover ``q = h / h_A`` through the truncation order.

    Terms of ``q`` above ``h.order`` are lost; pass a longer truncation if
    the full polynomial is needed.
    """
    padded = LaurentPoly.from_coeffs(h.coeffs, h.start) * H_A_DENOMINATOR
    return LaurentPoly({d: c for d, c in padded.terms.items() if d <= h.order})


def gk_dim_and_multiplicity(q: LaurentPoly) -> tuple[int, Fraction | int]:
    """GK-dimension and multiplicity of a module with characteristic polynomial ``q``.

    With ``v`` the order of vanishing of ``q`` at ``t = 1``, the dimension is
    ``3 - v`` and the multiplicity is ``r(1)/2`` where ``q = (1-t)^v r``.
    """
    v = q.root_multiplicity_at_one()
    if v > 3:
        raise ValueError(f"{q} vanishes to order {v} > 3 at t = 1; no module has this series")
    rest = q
    for _ in range(v):
        rest = rest.divide_exact(ONE_MINUS_T)
    e = Fraction(rest(1), 2)
    return 3 - v, int(e) if e.denominator == 1 else e


def rank(q: LaurentPoly) -> int:
    """Torsion-free rank, the value ``q(1)``."""
    return q(1)
