"""Nodes of the double plane z^2 = f above tangency points, and tritangent lines."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from ..poly.fields import QQ
from ..poly.jets import implicit_jet
from ..poly.multipoly import MultiPoly
from .curve import AFFINE_VARS, PlaneCurve, RationalPoint, local_equation
from .intersection import fulton_multiplicity, multiplicity_profile

JET_ORDER = 8


class Verdict(enum.Enum):
    ORDINARY_NODE = "OrdinaryNode"
    WORSE_SINGULARITY = "WorseSingularity"
    SMOOTH_PREIMAGE = "SmoothPreimage"


@dataclass(frozen=True)
class NodeCertificate:
    point: RationalPoint
    verdict: Verdict
    coefficient: object = None  # b2 - a2, None when the tangents differ
    branch_jet: tuple = ()
    sextic_jet: tuple = ()
    multiplicity: int | float | None = None

    @property
    def tangent_cone(self) -> str | None:
        """Initial ideal of (y - g, z^2 - f) after the local normalization."""
        if self.coefficient is None:
            return None
        return f"(y, z^2 + {QQ(-self.coefficient)}*x^2)"


def _straighten(f: MultiPoly, g: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Linear change of (u, v) sending the common tangent of f at 0 to {v = 0}."""
    a = f.coefficient((1, 0))
    b = f.coefficient((0, 1))
    u = MultiPoly.variable("u", AFFINE_VARS)
    v = MultiPoly.variable("v", AFFINE_VARS)
    if b != 0:
        # new coordinates (u, w = a u + b v), so v = (w - a u) / b
        images = {"u": u, "v": (v - u.scale(a)).scale(QQ.div(1, b))}
    else:
        # vertical tangent a u = 0: new coordinates (v, w = a u)
        images = {"u": v.scale(QQ.div(1, a)), "v": u}
    return f.substitute(images), g.substitute(images)


def certify_node_on_double_cover(
    d: PlaneCurve, d6: PlaneCurve, q: RationalPoint, order: int = JET_ORDER
) -> NodeCertificate:
    """Classify the point of the double cover branched along ``d6`` lying over ``q``.

    With the common tangent moved to {y = 0}, write d6 as y = a2 x^2 + ...
    and d as y = b2 x^2 + ...; the preimage of d is an ordinary node exactly
    when b2 != a2.  Transverse intersection gives a smooth preimage.
    """
    if not isinstance(q, RationalPoint):
        q = RationalPoint(q)
    if not d.contains(q) or not d6.contains(q):
        raise ValueError(f"{q} does not lie on both curves")
    gd, g6 = d.gradient(q), d6.gradient(q)
    if not any(gd) or not any(g6):
        raise ValueError(f"{q} is a singular point of one of the curves")
    mult = fulton_multiplicity(d.poly, d6.poly, q)
    cross = (gd[1] * g6[2] - gd[2] * g6[1], gd[2] * g6[0] - gd[0] * g6[2], gd[0] * g6[1] - gd[1] * g6[0])
    if any(cross):
        return NodeCertificate(q, Verdict.SMOOTH_PREIMAGE, multiplicity=mult)
    f6 = local_equation(d6.poly, q)
    fd = local_equation(d.poly, q)
    f6, fd = _straighten(f6, fd)
    a = implicit_jet(f6, order, "u", "v")
    b = implicit_jet(fd, order, "u", "v")
    coeff = QQ(b[2] - a[2])
    verdict = Verdict.ORDINARY_NODE if coeff != 0 else Verdict.WORSE_SINGULARITY
    return NodeCertificate(q, verdict, coeff, b.coeffs, a.coeffs, mult)


def is_tritangent(line: PlaneCurve, d6: PlaneCurve, rng: random.Random | None = None) -> bool:
    """True iff the line meets the sextic in exactly three points, each with multiplicity 2."""
    if line.degree != 1:
        raise ValueError("is_tritangent needs a line")
    if d6.poly.divmod(line.poly)[1].is_zero():
        raise ValueError(f"line {line} is a component of the sextic")
    return multiplicity_profile(line, d6, rng).multiplicities == (2, 2, 2)
