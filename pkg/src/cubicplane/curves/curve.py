from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..poly.fields import QQ
from ..poly.multipoly import MultiPoly
from ..poly.parser import parse_poly

PLANE_VARS = ("x", "y", "z")
AFFINE_VARS = ("u", "v")


@dataclass(frozen=True)
class RationalPoint:
    """A point of P^2(Q), stored with its first nonzero coordinate equal to 1."""

    coords: tuple

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a point of P^2 needs three coordinates")
        cs = [Fraction(c) for c in coords]
        lead = next((c for c in cs if c != 0), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        object.__setattr__(self, "coords", tuple(QQ(c / lead) for c in cs))

    def chart(self) -> int:
        """Index of the coordinate set to 1 when dehomogenizing (prefers z, then y)."""
        for i in (2, 1, 0):
            if self.coords[i] != 0:
                return i
        raise AssertionError("unreachable")

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __lt__(self, other):
        return self.coords < other.coords


@dataclass(frozen=True)
class PlaneCurve:
    """A plane projective curve given by a nonzero homogeneous form in x, y, z."""

    poly: MultiPoly
    degree: int

    def __init__(self, poly: MultiPoly, degree: int | None = None):
        if not isinstance(poly, MultiPoly):
            raise TypeError("PlaneCurve needs a MultiPoly")
        poly = poly.with_vars(PLANE_VARS)
        if not poly:
            raise ValueError("the zero polynomial does not define a curve")
        d = poly.degree()
        if degree is not None and d != degree:
            raise ValueError(f"polynomial has degree {d}, declared {degree}")
        if not poly.is_homogeneous():
            raise ValueError(f"curve equation is not homogeneous: {poly}")
        if d < 1:
            raise ValueError("a constant does not define a curve")
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "degree", d)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "PlaneCurve":
        return cls(parse_poly(text, PLANE_VARS), degree)

    def contains(self, q: RationalPoint) -> bool:
        return self.poly.evaluate(q.coords) == 0

    def gradient(self, q: RationalPoint) -> tuple:
        return tuple(self.poly.derivative(v).evaluate(q.coords) for v in PLANE_VARS)

    def __str__(self):
        return str(self.poly)


def local_equation(f: MultiPoly, q: RationalPoint) -> MultiPoly:
    """Dehomogenize ``f`` on a chart containing ``q`` and move ``q`` to the origin.

    The result lives in the affine context ``(u, v)``; ``u`` and ``v`` are the
    two remaining projective coordinates in their original order.
    """
    f = f.with_vars(PLANE_VARS)
    i = q.chart()
    rest = [j for j in range(3) if j != i]
    u = MultiPoly.variable("u", AFFINE_VARS)
    v = MultiPoly.variable("v", AFFINE_VARS)
    scale = q.coords[i]
    images = {PLANE_VARS[i]: MultiPoly.constant(1, AFFINE_VARS)}
    for name, j in zip((u, v), rest):
        images[PLANE_VARS[j]] = name + QQ.div(q.coords[j], scale)
    return f.substitute(images, AFFINE_VARS)
