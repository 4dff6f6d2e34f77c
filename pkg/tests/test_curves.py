import random

import pytest

from cubicplane.curves.curve import PlaneCurve, RationalPoint, local_equation
from cubicplane.curves.smoothness import is_smooth, rational_singular_points, singular_points_mod_p
from cubicplane.poly.multipoly import PolyRing
from gen import random_form

R = PolyRing("x,y,z")


def curve(text, degree=None):
    return PlaneCurve.parse(text, degree)


def test_point_normalization():
    q = RationalPoint(0, 2, 4)
    assert q.coords == (0, 1, 2)
    assert str(q) == "(0:1:2)"
    assert q == RationalPoint((0, 3, 6))
    with pytest.raises(ValueError):
        RationalPoint(0, 0, 0)


def test_curve_validation():
    with pytest.raises(ValueError):
        PlaneCurve(R.zero())
    with pytest.raises(ValueError):
        curve("x^2 + y")
    with pytest.raises(ValueError):
        curve("x^2 + y^2", degree=3)


def test_local_equation_moves_point_to_origin():
    f = R("x^2 + y^2 - z^2")
    q = RationalPoint(3, 4, 5)
    loc = local_equation(f, q)
    assert loc.evaluate((0, 0)) == 0
    assert loc.vars == ("u", "v")


@pytest.mark.parametrize("text", ["x^3 + y^3 + z^3", "x^2 + y^2 - z^2", "x", "x^4 + y^4 + z^4 + x*y*z^2"])
def test_smooth_curves(text):
    assert is_smooth(curve(text))


def test_minor_of_smooth_example_is_smooth():
    d = curve("x^4*y + x*y^4 + x^4*z + x*y^3*z + x*y*z^3 - y*z^4 - z^5")
    assert is_smooth(d)


def test_singular_with_rational_witness():
    cert = is_smooth(curve("x*y"))
    assert not cert
    assert cert.point == RationalPoint(0, 0, 1)
    assert cert.witness["point"] == "(0:0:1)"


@pytest.mark.parametrize(
    "text, points",
    [
        ("x*y*z", [(0, 0, 1), (0, 1, 0), (1, 0, 0)]),
        ("y^2*z - x^3", [(0, 0, 1)]),
        ("x^2 + y^2 - z^2", []),
    ],
)
def test_rational_singular_points_exhaustive(text, points):
    sp = rational_singular_points(curve(text))
    assert sp.exhaustive
    assert sp.points == sorted(RationalPoint(p) for p in points)


def test_irrational_singularities_are_flagged():
    # nodes at x = +-sqrt(2) z, y = 0
    c = curve("(x^2 - 2*z^2)^2 + y^3*z")
    cert = is_smooth(c)
    assert not cert and cert.point is None
    assert cert.witness["eliminant"] == "x^2 - 2"
    sp = rational_singular_points(c)
    assert sp.points == [] and not sp.exhaustive


def test_non_reduced_curve():
    sp = rational_singular_points(curve("x^2*(x + y + z)"))
    assert sp.positive_dimensional
    assert not is_smooth(curve("x^2*(x + y + z)"))


@pytest.mark.parametrize("seed", range(12))
def test_smoothness_agrees_with_search_mod_p(seed):
    """A rationally smooth curve has smooth reductions at almost all primes, and
    a singular rational point reduces to a singular point mod every prime."""
    rng = random.Random(seed)
    d = rng.randint(2, 4)
    if seed % 3 == 0:
        # force a singular point at (0:0:1): no terms of degree < 2 in x, y after setting z = 1
        base = random_form(rng, d)
        f = R.from_terms((e, c) for e, c in base.terms.items() if e[0] + e[1] >= 2)
        if not f:
            f = R("x*y") * R("z") ** (d - 2)
    else:
        f = random_form(rng, d, density=0.8)
    c = PlaneCurve(f)
    cert = is_smooth(c)
    primes = [p for p in (5, 7, 11, 13, 17, 19, 23) if all(int(v) % p for v in f.primitive().terms.values())][:3]
    found = [bool(singular_points_mod_p(PlaneCurve(f.primitive()), p)) for p in primes]
    if cert.point is not None:
        assert all(found)
    if cert:
        # smooth over Q-bar: only finitely many bad primes, and our small coefficients rarely hit them
        assert found.count(False) >= 1
