"""Cubic fourfolds containing the plane {x = y = z = 0}, their quadric bundle
and discriminant curves.

Coordinates on P^5 are ``(x, y, z, t0, t1, t2)``.  Such a cubic reads

    F = sum_{i <= j} a_ij t_i t_j + sum_i b_i t_i + c

with a_ij, b_i, c forms in (x, y, z) of degrees 1, 2, 3.  Projecting from the
plane gives the quadric bundle q(t0, t1, t2, s) with Gram matrix

    [2a00  a01  a02  b0]
    [ a01 2a11  a12  b1]
    [ a02  a12 2a22  b2]
    [  b0   b1   b2  2c]

so that q = v^T M v / 2 and F = q(t0, t1, t2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..curves.curve import PLANE_VARS, PlaneCurve
from ..poly.fields import QQ
from ..poly.matrix import PolyMatrix, determinant
from ..poly.multipoly import MultiPoly
from ..poly.parser import parse_poly

SPACE_VARS = ("x", "y", "z", "t0", "t1", "t2")
FORM_VARS = ("x", "y", "z", "t0", "t1", "t2", "s")
SECTION_VARS = ("x", "y", "z", "t1", "t2")
T_VARS = ("t0", "t1", "t2")

COEFF_DEGREES = {
    "a00": 1, "a01": 1, "a02": 1, "a11": 1, "a12": 1, "a22": 1,
    "b0": 2, "b1": 2, "b2": 2,
    "c": 3,
}  # fmt: skip


class DegenerateBundleError(ValueError):
    """The discriminant determinant vanishes identically."""


def _as_plane_poly(value, name: str) -> MultiPoly:
    if isinstance(value, str):
        value = parse_poly(value, PLANE_VARS)
    elif isinstance(value, (int, Fraction)):
        value = MultiPoly.constant(value, PLANE_VARS)
    elif not isinstance(value, MultiPoly):
        raise TypeError(f"{name}: expected a polynomial, got {type(value).__name__}")
    try:
        return value.with_vars(PLANE_VARS)
    except ValueError as exc:
        raise ValueError(f"{name}: {exc}") from None


@dataclass(frozen=True)
class GramCubic:
    a00: MultiPoly
    a01: MultiPoly
    a02: MultiPoly
    a11: MultiPoly
    a12: MultiPoly
    a22: MultiPoly
    b0: MultiPoly
    b1: MultiPoly
    b2: MultiPoly
    c: MultiPoly

    def __post_init__(self):
        for name, d in COEFF_DEGREES.items():
            p = getattr(self, name)
            if p and not p.is_homogeneous(d):
                raise ValueError(f"{name} must be homogeneous of degree {d} in x, y, z (or zero), got {p}")

    def a(self, i: int, j: int) -> MultiPoly:
        i, j = min(i, j), max(i, j)
        return getattr(self, f"a{i}{j}")

    def b(self, i: int) -> MultiPoly:
        return getattr(self, f"b{i}")

    @property
    def gram_matrix(self) -> PolyMatrix:
        rows = []
        for i in range(3):
            row = [self.a(i, j).scale(2) if i == j else self.a(i, j) for j in range(3)]
            row.append(self.b(i))
            rows.append(row)
        rows.append([self.b0, self.b1, self.b2, self.c.scale(2)])
        return PolyMatrix(rows, PLANE_VARS)

    @property
    def form(self) -> MultiPoly:
        """The cubic F in (x, y, z, t0, t1, t2)."""
        t = [MultiPoly.variable(v, SPACE_VARS) for v in T_VARS]
        F = self.c.with_vars(SPACE_VARS)
        for i in range(3):
            F = F + self.b(i).with_vars(SPACE_VARS) * t[i]
            for j in range(i, 3):
                F = F + self.a(i, j).with_vars(SPACE_VARS) * t[i] * t[j]
        return F

    def quadratic_form(self) -> MultiPoly:
        """q(t0, t1, t2, s) = v^T M v / 2 with v = (t0, t1, t2, s), in FORM_VARS."""
        m = self.gram_matrix
        v = [MultiPoly.variable(n, FORM_VARS) for n in ("t0", "t1", "t2", "s")]
        q = MultiPoly.zero(FORM_VARS)
        for i in range(4):
            for j in range(4):
                if m[i, j]:
                    q = q + m[i, j].with_vars(FORM_VARS) * v[i] * v[j]
        return q.scale(Fraction(1, 2))

    def coefficients(self) -> dict[str, MultiPoly]:
        return {name: getattr(self, name) for name in COEFF_DEGREES}

    @classmethod
    def from_gram_matrix(cls, m) -> "GramCubic":
        if not isinstance(m, PolyMatrix):
            m = PolyMatrix([[_as_plane_poly(e, "entry") for e in row] for row in m], PLANE_VARS)
        if m.shape != (4, 4) or not m.is_symmetric():
            raise ValueError("expected a symmetric 4x4 Gram matrix")
        half = Fraction(1, 2)
        return cls(
            a00=m[0, 0].scale(half), a01=m[0, 1], a02=m[0, 2],
            a11=m[1, 1].scale(half), a12=m[1, 2], a22=m[2, 2].scale(half),
            b0=m[0, 3], b1=m[1, 3], b2=m[2, 3],
            c=m[3, 3].scale(half),
        )  # fmt: skip

    @classmethod
    def from_form(cls, F: MultiPoly) -> "GramCubic":
        """Read the coefficients back from a cubic containing the plane."""
        F = F.with_vars(SPACE_VARS)
        if F and not F.is_homogeneous(3):
            raise ValueError("expected a homogeneous cubic")
        parts: dict[tuple, dict] = {}
        for e, c in F.terms.items():
            tpart = e[3:]
            if sum(tpart) == 3:
                raise ValueError("the cubic does not contain the plane x = y = z = 0")
            parts.setdefault(tpart, {})[e[:3]] = c

        def coeff(tpart):
            return MultiPoly(parts.get(tpart, {}), PLANE_VARS)

        unit = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        kw = {"c": coeff((0, 0, 0))}
        for i in range(3):
            kw[f"b{i}"] = coeff(unit[i])
            for j in range(i, 3):
                kw[f"a{i}{j}"] = coeff(tuple(unit[i][k] + unit[j][k] for k in range(3)))
        return cls(**kw)


def build_cubic(coeffs: Mapping[str, object]) -> GramCubic:
    """Assemble a :class:`GramCubic` from any subset of a00..a22, b0..b2, c (missing = 0)."""
    unknown = set(coeffs) - set(COEFF_DEGREES)
    if unknown:
        raise KeyError(f"unknown coefficient names {sorted(unknown)}")
    values = {}
    for name, d in COEFF_DEGREES.items():
        p = _as_plane_poly(coeffs.get(name, 0), name)
        if p and not p.is_homogeneous(d):
            raise ValueError(f"{name} must be homogeneous of degree {d} in x, y, z, got {p}")
        values[name] = p
    return GramCubic(**values)


@dataclass(frozen=True)
class HyperplaneSpec:
    """H: t0 = l1(t1, t2) + l0(x, y, z), with l1 = c1*t1 + c2*t2."""

    c1: object = 0
    c2: object = 0
    l0: MultiPoly = MultiPoly.zero(PLANE_VARS)

    def __post_init__(self):
        object.__setattr__(self, "c1", QQ(self.c1))
        object.__setattr__(self, "c2", QQ(self.c2))
        l0 = _as_plane_poly(self.l0, "l0")
        if l0 and not l0.is_homogeneous(1):
            raise ValueError(f"l0 must be a linear form in x, y, z, got {l0}")
        object.__setattr__(self, "l0", l0)

    @classmethod
    def parse(cls, l1: str = "0", l0: str = "0") -> "HyperplaneSpec":
        lin = parse_poly(l1, ("t1", "t2"))
        if lin and not lin.is_homogeneous(1):
            raise ValueError(f"l1 must be a linear form in t1, t2, got {lin}")
        return cls(lin.coefficient((1, 0)), lin.coefficient((0, 1)), parse_poly(l0, PLANE_VARS))

    @property
    def is_standard(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and not self.l0

    def __str__(self):
        t = MultiPoly({(1, 0): self.c1, (0, 1): self.c2}, ("t1", "t2"))
        return f"t0 = {t}" + (f" + ({self.l0})" if self.l0 else "")


STANDARD_HYPERPLANE = HyperplaneSpec()


def discriminant_sextic(X: GramCubic) -> PlaneCurve:
    """D6 = det of the Gram matrix."""
    d = determinant(X.gram_matrix)
    if not d:
        raise DegenerateBundleError("the Gram determinant vanishes identically (degenerate quadric bundle)")
    if not d.is_homogeneous(6):
        raise AssertionError(f"discriminant is not a sextic form: {d}")
    return PlaneCurve(d, 6)


def substitution_matrix(H: HyperplaneSpec) -> PolyMatrix:
    """4x3 matrix T with (t0, t1, t2, s) = T (t1, t2, s) on H."""
    one = MultiPoly.constant(1, PLANE_VARS)
    zero = MultiPoly.zero(PLANE_VARS)
    return PolyMatrix(
        [
            [MultiPoly.constant(H.c1, PLANE_VARS), MultiPoly.constant(H.c2, PLANE_VARS), H.l0],
            [one, zero, zero],
            [zero, one, zero],
            [zero, zero, one],
        ],
        PLANE_VARS,
    )


def restrict_hyperplane(X: GramCubic, H: HyperplaneSpec = STANDARD_HYPERPLANE) -> PolyMatrix:
    """Gram matrix of q_H(t1, t2, s) = q(l1(t1, t2) + l0 s, t1, t2, s)."""
    T = substitution_matrix(H)
    return T.transpose() @ X.gram_matrix @ T


def discriminant_quintic(X: GramCubic, H: HyperplaneSpec = STANDARD_HYPERPLANE) -> PlaneCurve:
    d = determinant(restrict_hyperplane(X, H))
    if not d:
        raise DegenerateBundleError("the restricted Gram determinant vanishes identically")
    if not d.is_homogeneous(5):
        raise AssertionError(f"restricted discriminant is not a quintic form: {d}")
    return PlaneCurve(d, 5)


def _scalar_det3(m) -> object:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def change_coordinates(X: GramCubic, A=None, B=None, C=None) -> GramCubic:
    """Apply (x, y, z) -> A (x, y, z) and (t0, t1, t2) -> B t + C (x, y, z).

    A and B are invertible 3x3 scalar matrices (identity by default), C is a
    3x3 scalar matrix (zero by default).  Such changes keep the plane
    {x = y = z = 0} inside the cubic, so the result is again a GramCubic.
    """
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    A = A or ident
    B = B or ident
    C = C or [[0] * 3 for _ in range(3)]
    for name, m in (("A", A), ("B", B)):
        if _scalar_det3([[QQ(c) for c in row] for row in m]) == 0:
            raise ValueError(f"{name} is not invertible")
    gens = [MultiPoly.variable(v, SPACE_VARS) for v in SPACE_VARS]
    images = {}
    for i, v in enumerate(PLANE_VARS):
        images[v] = sum((gens[j].scale(QQ(A[i][j])) for j in range(3)), MultiPoly.zero(SPACE_VARS))
    for i, v in enumerate(T_VARS):
        img = sum((gens[3 + j].scale(QQ(B[i][j])) for j in range(3)), MultiPoly.zero(SPACE_VARS))
        img = img + sum((gens[j].scale(QQ(C[i][j])) for j in range(3)), MultiPoly.zero(SPACE_VARS))
        images[v] = img
    return GramCubic.from_form(X.form.substitute(images))


def move_line_to_normal_form(X: GramCubic, H: HyperplaneSpec) -> tuple[GramCubic, HyperplaneSpec]:
    """Change t0 -> t0 + l1(t1, t2) so that L = P ∩ H becomes {x = y = z = t0 = 0}."""
    if H.c1 == 0 and H.c2 == 0:
        return X, H
    B = [[1, H.c1, H.c2], [0, 1, 0], [0, 0, 1]]
    return change_coordinates(X, B=B), HyperplaneSpec(0, 0, H.l0)


def hyperplane_section(X: GramCubic, H: HyperplaneSpec = STANDARD_HYPERPLANE) -> MultiPoly:
    """Equation of Y = X ∩ H in the coordinates (x, y, z, t1, t2)."""
    gens = {v: MultiPoly.variable(v, SECTION_VARS) for v in SECTION_VARS}
    images = dict(gens)
    images["t0"] = gens["t1"].scale(H.c1) + gens["t2"].scale(H.c2) + H.l0.with_vars(SECTION_VARS)
    return X.form.substitute(images, SECTION_VARS)


# -- lines of the first type --------------------------------------------------


def rank_qq(rows: list[list]) -> int:
    """Exact rank of a rational matrix."""
    m = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


QUADRIC_BASIS = ((2, 0), (1, 1), (0, 2))  # t1^2, t1*t2, t2^2
QUADRIC_NAMES = ("t1^2", "t1*t2", "t2^2")


@dataclass(frozen=True)
class FirstTypeResult:
    first_type: bool
    rank: int
    restricted: dict  # partial name -> restricted quadric (MultiPoly in t1, t2)
    matrix: tuple  # rows in the basis t1^2, t1*t2, t2^2
    section_rank: int
    same_span_in_section: bool

    def __bool__(self):
        return self.first_type


def _restricted_rows(F: MultiPoly, vars_: tuple[str, ...], keep=("t1", "t2")):
    kill = {v: 0 for v in vars_ if v not in keep}
    out = {}
    rows = []
    for v in vars_:
        r = F.derivative(v).substitute(kill).with_vars(F.vars)
        r = r.with_vars(keep) if r else MultiPoly.zero(keep)
        out[f"d/d{v}"] = r
        rows.append([r.coefficient(e) for e in QUADRIC_BASIS])
    return out, rows


def line_first_type(X: GramCubic, H: HyperplaneSpec = STANDARD_HYPERPLANE) -> FirstTypeResult:
    """Whether L = P ∩ H is a line of the first type on X.

    The six partials of F restricted to L = {x = y = z = t0 = 0} are expanded
    in (t1^2, t1 t2, t2^2); L is of the first type iff they have rank 3.  The
    same is computed for the five partials of the hyperplane section Y, which
    must span the same space.
    """
    Xn, Hn = move_line_to_normal_form(X, H)
    restricted, rows = _restricted_rows(Xn.form, SPACE_VARS)
    rank = rank_qq(rows)
    _, section_rows = _restricted_rows(hyperplane_section(Xn, Hn), SECTION_VARS)
    srank = rank_qq(section_rows)
    same = srank == rank == rank_qq(rows + section_rows)
    return FirstTypeResult(rank == 3, rank, restricted, tuple(tuple(r) for r in rows), srank, same)
