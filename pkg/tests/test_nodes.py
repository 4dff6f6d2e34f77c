import random
from fractions import Fraction

import pytest

from cubicplane.curves.curve import PlaneCurve, RationalPoint
from cubicplane.curves.intersection import fulton_multiplicity, multiplicity_profile
from cubicplane.curves.nodes import Verdict, certify_node_on_double_cover, is_tritangent
from cubicplane.curves.smoothness import is_smooth
from cubicplane.poly.multipoly import PolyRing

R = PolyRing("x,y,z")
x, y, z = R.gens
F = x**3 + y**3 + z**3
D6 = PlaneCurve((z - 2 * y) ** 2 * y * F + (z - 2 * x) ** 2 * x * F + (x - y) ** 2 * (x - 2 * y) ** 2 * x * y)


def test_ordinary_node_with_unit_coefficient():
    # D6 locally y = x^2, D locally y = 2 x^2
    cert = certify_node_on_double_cover(PlaneCurve.parse("y*z - 2*x^2"), PlaneCurve.parse("y*z - x^2"), RationalPoint(0, 0, 1))
    assert cert.verdict is Verdict.ORDINARY_NODE
    assert cert.coefficient == 1
    assert cert.multiplicity == 2
    assert cert.tangent_cone == "(y, z^2 + -1*x^2)"


def test_equal_second_jets_give_worse_singularity():
    cert = certify_node_on_double_cover(
        PlaneCurve.parse("y*z^2 - x^2*z + x^3"), PlaneCurve.parse("y*z - x^2"), RationalPoint(0, 0, 1)
    )
    assert cert.verdict is Verdict.WORSE_SINGULARITY
    assert cert.coefficient == 0
    assert cert.multiplicity > 2


def test_transverse_intersection_has_smooth_preimage():
    cert = certify_node_on_double_cover(PlaneCurve.parse("x"), PlaneCurve.parse("y"), RationalPoint(0, 0, 1))
    assert cert.verdict is Verdict.SMOOTH_PREIMAGE
    assert cert.coefficient is None and cert.tangent_cone is None


def test_vertical_common_tangent():
    # the common tangent is x = 0; the straightening must swap the axes
    cert = certify_node_on_double_cover(PlaneCurve.parse("x*z - 3*y^2"), PlaneCurve.parse("x*z - y^2"), RationalPoint(0, 0, 1))
    assert cert.verdict is Verdict.ORDINARY_NODE
    assert cert.multiplicity == 2


def test_preconditions():
    with pytest.raises(ValueError):
        certify_node_on_double_cover(PlaneCurve.parse("x"), PlaneCurve.parse("y"), RationalPoint(1, 1, 1))
    with pytest.raises(ValueError):
        certify_node_on_double_cover(PlaneCurve.parse("x*y"), PlaneCurve.parse("x"), RationalPoint(0, 0, 1))


@pytest.mark.parametrize("seed", range(8))
def test_verdict_matches_multiplicity(seed):
    rng = random.Random(seed)
    # conics tangent to y = 0 at (0:0:1): y z - a x^2 + y * (linear)
    a, b = rng.randint(1, 3), rng.choice([1, 2, 3, rng.randint(1, 3)])
    c1, c2 = rng.randint(-2, 2), rng.randint(-2, 2)
    d = PlaneCurve(y * z - x**2 * a + y * (x * c1 + y * c2))
    d6 = PlaneCurve(y * z - x**2 * b + y * y * rng.randint(-2, 2))
    q = RationalPoint(0, 0, 1)
    cert = certify_node_on_double_cover(d, d6, q)
    mult = fulton_multiplicity(d.poly, d6.poly, q)
    assert (cert.verdict is Verdict.ORDINARY_NODE) == (mult == 2)


@pytest.mark.parametrize(
    "line, points",
    [
        ("x", [(0, 1, 2), (0, 0, 1), (0, 1, -1)]),
        ("y", [(1, 0, 2), (0, 0, 1), (1, 0, -1)]),
    ],
)
def test_worked_sextic_against_line_components(line, points):
    # D6 restricted to x = 0 is (z - 2y)^2 y (y^3 + z^3): one tangency, the rest transverse
    d = PlaneCurve.parse(line)
    assert multiplicity_profile(d, D6).multiplicities == (2, 1, 1, 1, 1)
    for pt in points:
        q = RationalPoint(pt)
        cert = certify_node_on_double_cover(d, D6, q)
        mult = fulton_multiplicity(d.poly, D6.poly, q)
        assert cert.multiplicity == mult
        if mult == 1:
            assert cert.verdict is Verdict.SMOOTH_PREIMAGE
        else:
            assert mult == 2 and cert.verdict is Verdict.ORDINARY_NODE
    tangency = certify_node_on_double_cover(d, D6, RationalPoint(points[0]))
    assert tangency.coefficient == Fraction(9, 4)


def test_tritangent_detection():
    g = x**5 + y**5 + z**5 + x * y * z**3
    sextic = PlaneCurve((x * (x - z) * (x - 2 * z)) ** 2 + y * g)
    assert is_tritangent(PlaneCurve.parse("y"), sextic)
    fermat6 = PlaneCurve.parse("x^6 + y^6 + z^6")
    assert is_smooth(fermat6)
    assert not is_tritangent(PlaneCurve.parse("x + 2*y + 3*z"), fermat6)
    # six rational transverse points
    six = PlaneCurve(y * z**5 + x * (x - z) * (x - 2 * z) * (x - 3 * z) * (x + z) * (x + 2 * z))
    assert not is_tritangent(PlaneCurve.parse("y"), six)
    with pytest.raises(ValueError):
        is_tritangent(PlaneCurve.parse("y"), PlaneCurve(y * F * F))
    with pytest.raises(ValueError):
        is_tritangent(PlaneCurve.parse("x*y"), fermat6)
