"""Coefficient domains: the rationals and prime fields F_p.

Scalars are plain Python numbers. Over QQ they are ``int`` when integral and
``Fraction`` otherwise (ints are much faster and mix freely with Fractions).
Over GF(p) they are ints reduced to ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]


class RationalField:
    characteristic = 0
    name = "QQ"

    def __call__(self, c) -> Scalar:
        if isinstance(c, int):
            return c
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, Rational):
            return self(Fraction(c.numerator, c.denominator))
        if isinstance(c, str):
            return self(Fraction(c))
        raise TypeError(f"cannot coerce {c!r} to a rational")

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return self(Fraction(a) / b)

    def is_field_of(self, c) -> bool:
        return isinstance(c, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with ``p`` elements; ``p`` should be a machine-word prime."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, c) -> int:
        if isinstance(c, int):
            return c % self.p
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {c.denominator} vanishes mod {self.p}")
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        if isinstance(c, str):
            return self(Fraction(c))
        raise TypeError(f"cannot coerce {c!r} to {self.name}")

    def div(self, a: int, b: int) -> int:
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a * pow(b, -1, self.p) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
