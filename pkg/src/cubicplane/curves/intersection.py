"""Local intersection numbers and global intersection profiles of plane curves."""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field

from ..poly.elimination import gcd_poly, resultant, squarefree_decompose
from ..poly.multipoly import MultiPoly
from .curve import PLANE_VARS, PlaneCurve, RationalPoint, local_equation

INFINITE = math.inf


class CommonComponentError(ValueError):
    """The two curves share a component, so the intersection is not finite."""


class FuelExhausted(RuntimeError):
    """The Fulton reduction ran past its step bound; a shared component is suspected."""


class GenericityError(RuntimeError):
    """Random coordinate changes never produced two agreeing intersection profiles."""


def _restrict_to_axis(f: MultiPoly) -> list:
    """Coefficients of f(u, 0) as a list indexed by the power of u."""
    out: dict[int, object] = {}
    for (a, b), c in f.terms.items():
        if b == 0:
            out[a] = c
    if not out:
        return []
    return [out.get(k, 0) for k in range(max(out) + 1)]


def _order(coeffs: list) -> int:
    return next(k for k, c in enumerate(coeffs) if c != 0)


def local_multiplicity(f: MultiPoly, g: MultiPoly, fuel: int | None = None) -> int | float:
    """Intersection number at the origin of two affine plane curves.

    ``f`` and ``g`` live in a two-variable context ``(u, v)``.  Follows the
    classical reduction: pick the argument whose restriction to ``v = 0`` has
    the smaller degree and cancel the leading term of the other's restriction
    (``I(F, G) = I(F, G + K F)``); once one restriction vanishes identically,
    split off the factor ``v`` (``I(vH, G) = I(v, G) + I(H, G)``) with
    ``I(v, G) = ord_u G(u, 0)``.

    Returns ``math.inf`` when the germs share a component through the origin.
    """
    if len(f.vars) != 2 or f.vars != g.vars:
        raise ValueError("local_multiplicity needs two polynomials in the same 2-variable context")
    origin = (0, 0)
    if not f or not g:
        return INFINITE
    if f.evaluate(origin) != 0 or g.evaluate(origin) != 0:
        return 0
    h = gcd_poly(f, g)
    if h.degree() > 0:
        if h.evaluate(origin) == 0:
            return INFINITE
        f, g = f.exact_div(h), g.exact_div(h)
    if fuel is None:
        fuel = f.degree() * g.degree() + 1
    uvar, vvar = f.vars
    u = MultiPoly.variable(uvar, f.vars, f.field)
    v = MultiPoly.variable(vvar, f.vars, f.field)
    total = 0
    splits = 0
    F, G = f, g
    while True:
        if F.evaluate(origin) != 0 or G.evaluate(origin) != 0:
            return total
        fr, gr = _restrict_to_axis(F), _restrict_to_axis(G)
        if not fr and not gr:
            raise FuelExhausted("both curves contain the axis v = 0; shared component not removed")
        if not gr:
            F, G, fr, gr = G, F, gr, fr
        if not fr:
            splits += 1
            if splits > fuel:
                raise FuelExhausted(f"more than {fuel} reduction steps")
            total += _order(gr)
            F = F.exact_div(v)
            continue
        r, s = len(fr) - 1, len(gr) - 1
        if r > s:
            F, G, fr, gr, r, s = G, F, gr, fr, s, r
        G = G.scale(fr[-1]) - F.scale(gr[-1]) * u ** (s - r)


def fulton_multiplicity(f: MultiPoly, g: MultiPoly, q: RationalPoint) -> int | float:
    """Intersection multiplicity at ``q`` of two plane curves given by homogeneous forms."""
    if not isinstance(q, RationalPoint):
        q = RationalPoint(q)
    fa, ga = local_equation(f, q), local_equation(g, q)
    fuel = max(f.degree(), 1) * max(g.degree(), 1) + 1
    return local_multiplicity(fa, ga, fuel)


@dataclass(frozen=True)
class MultiplicityProfile:
    total: int
    multiplicities: tuple[int, ...]
    resolved: bool = True
    details: dict = field(default_factory=dict, compare=False)

    @property
    def counts(self) -> Counter:
        return Counter(self.multiplicities)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities) if self.multiplicities else 0

    def __str__(self):
        parts = [f"{m}×{n}" for m, n in sorted(self.counts.items(), reverse=True)]
        return " + ".join(parts) if parts else "empty"


def _random_change(rng: random.Random) -> list[list[int]]:
    while True:
        a = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        det = (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
        if det:
            return a


def apply_linear_change(p: MultiPoly, a: list[list[int]]) -> MultiPoly:
    gens = [MultiPoly.variable(v, PLANE_VARS, p.field) for v in PLANE_VARS]
    images = {}
    for i, name in enumerate(PLANE_VARS):
        img = MultiPoly.zero(PLANE_VARS, p.field)
        for j in range(3):
            if a[i][j]:
                img = img + gens[j].scale(a[i][j])
        images[name] = img
    return p.with_vars(PLANE_VARS).substitute(images)


def _profile_once(f: MultiPoly, g: MultiPoly, rng: random.Random) -> tuple[tuple[int, ...], list]:
    total = f.degree() * g.degree()
    while True:
        a = _random_change(rng)
        ft, gt = apply_linear_change(f, a), apply_linear_change(g, a)
        # (0:1:0) must lie on neither curve so the y-leading coefficients are constants
        if ft.evaluate((0, 1, 0)) != 0 and gt.evaluate((0, 1, 0)) != 0:
            break
    fa, ga = ft.substitute({"z": 1}), gt.substitute({"z": 1})
    res = resultant(fa, ga, "y")
    mults: list[int] = []
    for factor, e in squarefree_decompose(res):
        mults.extend([e] * factor.degree())
    at_infinity = total - res.degree()
    if at_infinity:
        mults.append(at_infinity)
    return tuple(sorted(mults, reverse=True)), a


def multiplicity_profile(
    c1: PlaneCurve, c2: PlaneCurve, rng: random.Random | None = None, retries: int = 8
) -> MultiplicityProfile:
    """Multiset of intersection multiplicities of two curves over the algebraic closure.

    After a random linear change of coordinates the resultant eliminating y
    has one root per intersection point, of order equal to the multiplicity.
    The change counts as generic once two independent changes give the same
    multiset.
    """
    rng = rng if rng is not None else random.Random(0)
    f, g = c1.poly, c2.poly
    common = gcd_poly(f, g)
    if common.degree() > 0:
        raise CommonComponentError(f"curves share the component {common}")
    total = c1.degree * c2.degree
    for attempt in range(retries):
        p1, a1 = _profile_once(f, g, rng)
        p2, a2 = _profile_once(f, g, rng)
        if p1 == p2:
            assert sum(p1) == total
            return MultiplicityProfile(total, p1, True, {"changes": (a1, a2), "attempts": attempt + 1})
    raise GenericityError(f"no two agreeing profiles in {retries} attempts")
