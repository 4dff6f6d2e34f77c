"""Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

Run with ``pytest tests/test_acceptance.py``; the summary is printed at the end
of the session (and inline with ``-s``).
"""

import random
import time
from collections import Counter
from contextlib import contextmanager
from math import comb

import sympy

from cubicplane.cubic.generality import CheckOptions, check_generality
from cubicplane.cubic.gram import GramCubic, discriminant_sextic, line_first_type, restrict_hyperplane
from cubicplane.cubic.probe import Status
from cubicplane.curves.curve import PlaneCurve, RationalPoint
from cubicplane.curves.intersection import INFINITE, fulton_multiplicity, multiplicity_profile
from cubicplane.numerics import dimension_tower, mukai_chi, riemann_roch_curve, two_torsion_rank
from cubicplane.poly.elimination import gcd_poly
from cubicplane.poly.matrix import determinant
from cubicplane.poly.multipoly import MultiPoly, PolyRing
from cubicplane.strata import NodalCurveModel, resolution_model, stratify
from cubicplane.worked import builtin
from gen import exponents, random_form, random_germ_pair, random_gram_cubic
from oracles import from_sympy, jet_multiplicity, to_sympy

RESULTS: dict[int, str] = {}
R = PolyRing("x,y,z")
x, y, z = R.gens
FERMAT = x**3 + y**3 + z**3


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        verdict = "PASS" if ok and elapsed < limit else "FAIL"
        RESULTS[number] = f"{verdict}  criterion {number}: {title}  ({elapsed:.2f} s, limit {limit:g} s)"
        print(RESULTS[number])
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f} s (limit {limit} s)"


def _homogenize(f: MultiPoly) -> MultiPoly:
    d = f.degree()
    return MultiPoly({(a, b, d - a - b): c for (a, b), c in f.terms.items()}, R.vars)


def test_criterion_1_smooth_restricted_quintic():
    with criterion(1, "restricted discriminant of the first worked cubic is smooth", 30):
        doc = builtin("ex-5.2.1")
        report = check_generality(doc.cubic, doc.hyperplane, CheckOptions(checks=("iii.DH_smooth",)))
        assert report["iii.DH_smooth"].status is Status.PASS
        # independent certificate: the Jacobian ideal is zero-dimensional
        sx, sy, sz = sympy.symbols("x y z")
        minor = sympy.Matrix(
            [[sx + sy + sz, sx, 0], [sx, sx, sz**2], [0, sz**2, sx**3 + sy**3 + sz**3]]
        ).det()
        d = sympy.expand(minor)
        assert from_sympy(d, R.vars) == R(report["iii.DH_smooth"].detail["curve"])
        basis = sympy.groebner([d.diff(v) for v in (sx, sy, sz)], sx, sy, sz, order="grevlex")
        assert basis.is_zero_dimensional


def test_criterion_2_line_of_the_first_type():
    with criterion(2, "line of the second worked cubic is of the first type", 1):
        S = PolyRing("x,y,z,t0,t1,t2")
        X = GramCubic.from_form(S("x*t1^2 + y*t2^2 + z*t1*t2"))
        res = line_first_type(X)
        assert res.first_type is True and res.rank == 3
        rows = {k: str(v) for k, v in res.restricted.items() if v}
        assert rows == {"d/dx": "t1^2", "d/dy": "t2^2", "d/dz": "t1*t2"}


def test_criterion_3_multiplicity_two_everywhere():
    with criterion(3, "restricted and full discriminants meet with multiplicity 2 only", 60):
        X = builtin("ex-5.2.3").cubic
        d_h = determinant(restrict_hyperplane(X))
        assert d_h == x * y * FERMAT
        d6 = discriminant_sextic(X).poly
        displayed = (z - 2 * y) ** 2 * y * FERMAT + (z - 2 * x) ** 2 * x * FERMAT
        displayed = displayed + (x - y) ** 2 * (x - 2 * y) ** 2 * x * y
        assert d6 in (displayed, -displayed)
        assert gcd_poly(d_h, d6).is_constant()
        assert sympy.gcd(to_sympy(d_h), to_sympy(d6)).is_ground
        prof = multiplicity_profile(PlaneCurve(d_h), PlaneCurve(d6), random.Random(0))
        assert prof.multiplicities == (2,) * 15
        assert prof.total == 30 == 5 * 6


def test_criterion_4_dimension_tower_at_five():
    with criterion(4, "dimension tower at k = 5", 1):
        t = dimension_tower(5)
        chi = mukai_chi(5, t.delta).chi
        got = (t.dim_linear_system, t.dim_V, t.dim_calV, t.g_normalization, t.prym_dim, chi)
        assert got == (26, 11, 5, 11, 5, -10)
        # independent: a degree-2 K3 has h^0(kH) = k^2 + 2
        assert t.dim_linear_system == 5**2 + 1


def test_criterion_5_riemann_roch():
    with criterion(5, "Riemann-Roch at (g, deg) = (10, 15) and two-torsion rank", 1):
        rr = riemann_roch_curve(10, 15)
        assert rr.chi == 6 and rr.dim_linear_system_if_h1_vanishes == 5
        assert two_torsion_rank(10) == 20


def test_criterion_6_strata_sweep():
    with criterion(6, "stratification invariants for all delta <= p_a <= 12", 5):
        for pa in range(0, 13):
            for delta in range(0, pa + 1):
                model = NodalCurveModel(pa, delta)
                strata = stratify(model)
                assert sum(s.count for s in strata) == 2**delta
                assert [s.count for s in strata] == [comb(delta, m) for m in range(delta + 1)]
                assert all(s.tangent_dim - s.orbit_dim == 2 * s.m for s in strata)
                assert resolution_model(model).total_dim == pa
                assert strata[-1].orbit_dim == pa - delta


def test_criterion_7_fulton_against_jet_oracle():
    with criterion(7, "Fulton multiplicity equals the jet-algebra oracle on 200 germ pairs", 120):
        rng = random.Random(2024)
        origin = RationalPoint(0, 0, 1)
        seen = Counter()
        attempts = 0
        while sum(seen.values()) < 200:
            attempts += 1
            assert attempts < 2000, "could not draw enough admissible pairs"
            f, g = random_germ_pair(rng)
            if not f or not g:
                continue
            m = jet_multiplicity(f, g)
            if m is None or not 1 <= m <= 8:
                continue
            got = fulton_multiplicity(_homogenize(f), _homogenize(g), origin)
            assert got != INFINITE and got == m, (f, g, got, m)
            seen[m] += 1
        assert len(seen) >= 5  # a spread of multiplicities, not just transversal pairs


def _coprime_pair(rng, d1, d2):
    while True:
        if rng.random() < 0.4:
            # both singular at (0:0:1), which forces a point of multiplicity >= 4
            f, g = (
                MultiPoly({e: rng.randint(-3, 3) for e in exponents(3, d) if e[0] + e[1] >= 2}, R.vars)
                for d in (d1, d2)
            )
        else:
            f, g = random_form(rng, d1, density=0.6), random_form(rng, d2, density=0.6)
        if f and g and f.is_homogeneous(d1) and g.is_homogeneous(d2) and gcd_poly(f, g).is_constant():
            return f, g


def test_criterion_8_bezout_conservation():
    with criterion(8, "Bezout totals and seed-independent profiles on 24 coprime pairs", 120):
        rng = random.Random(77)
        degrees = [(rng.randint(1, 5), rng.randint(1, 6)) for _ in range(18)] + [(5, 6)] * 6
        for i, (d1, d2) in enumerate(degrees):
            f, g = _coprime_pair(rng, d1, d2)
            a = multiplicity_profile(PlaneCurve(f), PlaneCurve(g), random.Random(2 * i))
            b = multiplicity_profile(PlaneCurve(f), PlaneCurve(g), random.Random(2 * i + 1))
            assert a.total == b.total == d1 * d2
            assert Counter(a.multiplicities) == Counter(b.multiplicities)


def test_criterion_9_minor_identity():
    with criterion(9, "restricted Gram determinant equals the first principal minor", 10):
        rng = random.Random(9)
        for _ in range(20):
            X = random_gram_cubic(rng)
            ours = determinant(restrict_hyperplane(X))
            M = sympy.Matrix(4, 4, lambda i, j: to_sympy(X.gram_matrix[i, j]).as_expr())
            minor = sympy.expand(M.minor_submatrix(0, 0).det(method="berkowitz"))
            assert ours == from_sympy(minor, R.vars)
