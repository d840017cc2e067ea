"""Exact coefficient fields: the rationals and prime fields.

Elements are plain Python values (``Fraction`` for the rationals, ``int`` in
``range(p)`` for a prime field); a field object knows how to combine them.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache


class Field:
    """Common interface shared by :class:`Rationals` and :class:`PrimeField`."""

    zero = 0
    one = 1
    characteristic = 0
    tag = ""

    def __call__(self, x):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def to_str(self, x) -> str:
        return str(x)

    def parse(self, s: str):
        return self(Fraction(s))

    def __repr__(self) -> str:
        return self.tag


class Rationals(Field):
    characteristic = 0
    tag = "q"

    def __init__(self, sample_height: int = 5):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.sample_height = sample_height

    def __call__(self, x):
        return Fraction(x)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def random_element(self, rng):
        h = self.sample_height
        return Fraction(rng.randint(-h, h))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"fp:{p}"
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return x * y % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Parse ``"q"`` or ``"fp:<p>"``."""
    tag = tag.strip().lower()
    if tag in ("q", "qq"):
        return QQ
    if tag.startswith("fp:"):
        try:
            return GF(int(tag[3:]))
        except ValueError as exc:
            raise ValueError(f"bad field tag {tag!r}: {exc}") from None
    raise ValueError(f"bad field tag {tag!r}; expected 'q' or 'fp:<p>'")
