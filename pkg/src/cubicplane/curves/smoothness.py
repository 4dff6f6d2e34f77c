"""Jacobian-criterion smoothness over the algebraic closure, by elimination.

The singular locus of ``F`` (characteristic 0) is the common zero set of
``F_x, F_y, F_z``.  It is examined in three pieces that cover P^2:

* the chart z = 1, where the y-resultants of the dehomogenized partials
  bound the possible x-coordinates, and a gcd in y over Q[x]/(m) (splitting
  m whenever a zero divisor turns up) decides which of them carry a common
  zero;
* the line z = 0 minus (1:0:0), by a univariate gcd;
* the point (1:0:0).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..poly import univariate as U
from ..poly.elimination import gcd_poly, resultant
from ..poly.multipoly import MultiPoly
from .curve import PLANE_VARS, PlaneCurve, RationalPoint


@dataclass
class SmoothnessCertificate:
    smooth: bool
    witness: dict = field(default_factory=dict)
    point: RationalPoint | None = None

    def __bool__(self):
        return self.smooth


@dataclass
class SingularPoints:
    points: list[RationalPoint]
    exhaustive: bool
    positive_dimensional: bool = False


@dataclass
class _Branch:
    chart: str
    eliminant: list  # dense polynomial in the chart's free coordinate
    fibre: list  # monic gcd in the second coordinate, coefficients mod eliminant


@dataclass
class _Analysis:
    partials: tuple
    common_factor: MultiPoly | None = None
    branches: list = field(default_factory=list)
    line_gcd: list = field(default_factory=list)
    point_100: bool = False

    @property
    def singular(self) -> bool:
        return bool(self.common_factor is not None or self.branches or U.deg(self.line_gcd) >= 1 or self.point_100)


def _to_ypoly(p: MultiPoly) -> list:
    """Bivariate (x, y) polynomial as a list over powers of y of dense x-polynomials."""
    ix, iy = p.vars.index("x"), p.vars.index("y")
    n = p.degree("y") + 1 if p else 0
    rows: list[dict] = [dict() for _ in range(n)]
    for e, c in p.terms.items():
        rows[e[iy]][e[ix]] = c
    return [U.trim([r.get(k, 0) for k in range(max(r) + 1)]) if r else [] for r in rows]


def _chart_eliminant(gs: list[MultiPoly], rng: random.Random) -> list:
    """Gcd of pairwise y-resultants: its roots contain every common x-coordinate."""
    nonzero = [g for g in gs if g]
    if any(g.is_constant() for g in nonzero):
        return [1]
    if len(nonzero) < 2:
        raise AssertionError("a single nonconstant partial implies a common factor")
    candidates = [(a, b) for i, a in enumerate(nonzero) for b in nonzero[i + 1:]]
    for _ in range(8):
        acc = None
        for a, b in candidates:
            r = resultant(a, b, "y")
            if not r:
                continue
            d = U.from_multipoly(r, "x")
            acc = d if acc is None else U.gcd(acc, d)
            if U.deg(acc) == 0:
                return [1]
        if acc is not None:
            return U.squarefree_part(acc)
        # every pair shares a factor with positive y-degree: mix in random combinations
        coeffs = [[rng.randint(-5, 5) for _ in nonzero] for _ in range(2)]
        combos = [sum((g.scale(c) for g, c in zip(nonzero, row)), nonzero[0] * 0) for row in coeffs]
        candidates = [(combos[0], combos[1]), (combos[0], nonzero[0])]
    raise RuntimeError("could not find a nonvanishing resultant")


def _analyse(curve: PlaneCurve, rng: random.Random | None = None) -> _Analysis:
    rng = rng or random.Random(0)
    F = curve.poly
    partials = tuple(F.derivative(v) for v in PLANE_VARS)
    an = _Analysis(partials)
    nonzero = [p for p in partials if p]
    common = nonzero[0]
    for p in nonzero[1:]:
        common = gcd_poly(common, p)
    if common.degree() > 0:
        an.common_factor = common
        return an

    # chart z = 1
    gs = [p.substitute({"z": 1}) for p in partials]
    m = _chart_eliminant(gs, rng)
    if U.deg(m) >= 1:
        ys = [_to_ypoly(g) for g in gs if g]
        for mi, h in U.gcd_over_quotient(ys, m):
            if not h or len(h) >= 2:
                an.branches.append(_Branch("z=1", mi, h))

    # line z = 0, points (x:1:0)
    line = [U.from_multipoly(p.substitute({"y": 1, "z": 0}), "x") for p in partials]
    g = []
    for d in line:
        g = U.gcd(g, d) if g else U.monic(d) if d else g
    an.line_gcd = g if any(line) else [0, 1]  # all vanish: whole line (excluded by the common factor test)

    an.point_100 = all(p.evaluate((1, 0, 0)) == 0 for p in partials)
    return an


def is_smooth(curve: PlaneCurve, rng: random.Random | None = None) -> SmoothnessCertificate:
    """Decide smoothness of ``curve`` over the algebraic closure of Q.

    On failure the witness names the chart and the eliminating polynomial
    whose roots carry singular points; a rational singular point is attached
    when one exists.
    """
    if not isinstance(curve, PlaneCurve):
        curve = PlaneCurve(curve)
    an = _analyse(curve, rng)
    if not an.singular:
        return SmoothnessCertificate(True, {"method": "resultant elimination", "charts": "z=1; z=0"})
    witness: dict = {}
    if an.common_factor is not None:
        witness = {"chart": "P^2", "kind": "singular along a curve", "eliminant": str(an.common_factor)}
    elif an.branches:
        b = an.branches[0]
        witness = {"chart": b.chart, "eliminant": str(U.to_multipoly(b.eliminant, "x", ("x",)))}
    elif U.deg(an.line_gcd) >= 1:
        witness = {"chart": "z=0", "eliminant": str(U.to_multipoly(an.line_gcd, "x", ("x",)))}
    else:
        witness = {"chart": "point", "eliminant": "(1:0:0)"}
    pts = _rational_points(an)
    point = pts.points[0] if pts.points else None
    if point is not None:
        witness["point"] = str(point)
    return SmoothnessCertificate(False, witness, point)


def _rational_points(an: _Analysis) -> SingularPoints:
    if an.common_factor is not None:
        return SingularPoints([], exhaustive=False, positive_dimensional=True)
    pts = set()
    exhaustive = True
    for b in an.branches:
        xs = U.rational_roots(b.eliminant)
        if len(xs) != U.deg(b.eliminant):
            exhaustive = False
        for a in xs:
            fibre = U.trim([U.evaluate(c, a) for c in b.fibre])
            if not fibre:
                exhaustive = False
                continue
            ys = U.rational_roots(fibre)
            if len(ys) != U.deg(U.squarefree_part(fibre)):
                exhaustive = False
            pts.update(RationalPoint(a, y, 1) for y in ys)
    if U.deg(an.line_gcd) >= 1:
        xs = U.rational_roots(an.line_gcd)
        if len(xs) != U.deg(U.squarefree_part(an.line_gcd)):
            exhaustive = False
        pts.update(RationalPoint(a, 1, 0) for a in xs)
    if an.point_100:
        pts.add(RationalPoint(1, 0, 0))
    return SingularPoints(sorted(pts), exhaustive)


def rational_singular_points(curve: PlaneCurve, rng: random.Random | None = None) -> SingularPoints:
    """Rational singular points, with a flag telling whether they are all the singular points."""
    if not isinstance(curve, PlaneCurve):
        curve = PlaneCurve(curve)
    return _rational_points(_analyse(curve, rng))


def singular_points_mod_p(curve: PlaneCurve, p: int) -> list[tuple[int, int, int]]:
    """Exhaustive search of P^2(F_p) for common zeros of F and its partials."""
    F = curve.poly
    polys = [F] + [F.derivative(v) for v in PLANE_VARS]
    reps = [(1, a, b) for a in range(p) for b in range(p)] + [(0, 1, b) for b in range(p)] + [(0, 0, 1)]
    out = []
    for pt in reps:
        if all(_eval_mod(q, pt, p) == 0 for q in polys):
            out.append(pt)
    return out


def _eval_mod(q: MultiPoly, pt, p: int) -> int:
    from fractions import Fraction

    total = 0
    for e, c in q.terms.items():
        c = Fraction(c)
        t = c.numerator * pow(c.denominator, -1, p)
        for v, a in zip(pt, e):
            t = t * pow(v, a, p)
        total += t
    return total % p
