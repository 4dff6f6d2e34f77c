import random

import pytest

from cubicplane.curves.curve import PlaneCurve, RationalPoint
from cubicplane.curves.intersection import (
    INFINITE,
    CommonComponentError,
    FuelExhausted,
    fulton_multiplicity,
    local_multiplicity,
    multiplicity_profile,
)
from cubicplane.poly.multipoly import PolyRing
from gen import random_germ_pair
from oracles import jet_multiplicity

A = PolyRing("u,v")
R = PolyRing("x,y,z")
u, v = A.gens


@pytest.mark.parametrize(
    "f, g, m",
    [
        ("u", "v", 1),
        ("v - u^2", "v + u^2", 2),
        ("v^2 - u^3", "v^2 - u^3 + u^5", 10),
        ("v^2 - u^3", "u*v", 5),
        ("u + 1", "v", 0),
        ("u^2 - v^3", "u^3 - v^2", 4),
    ],
)
def test_local_multiplicity_examples(f, g, m):
    assert local_multiplicity(A(f), A(g)) == m
    assert jet_multiplicity(A(f), A(g)) == m


def test_shared_branch_is_infinite():
    h = A("v - u^2")
    assert local_multiplicity(h * A("u + 1"), h * A("v + 2")) == INFINITE
    # a common factor away from the origin is harmless
    far = A("u - 1")
    assert local_multiplicity(far * u, far * v) == 1


def test_fuel_bound():
    with pytest.raises(FuelExhausted):
        local_multiplicity(A("v^2 - u^3"), A("v^2 - u^3 + u^7"), fuel=1)


def _random_pair(rng):
    while True:
        f, g = random_germ_pair(rng)
        if f and g:
            m = jet_multiplicity(f, g)
            if m is not None and 1 <= m <= 8:
                return f, g, m


@pytest.mark.parametrize("seed", range(15))
def test_symmetry(seed):
    f, g, m = _random_pair(random.Random(seed))
    assert local_multiplicity(f, g) == local_multiplicity(g, f) == m


@pytest.mark.parametrize("seed", range(10))
def test_additivity(seed):
    rng = random.Random(100 + seed)
    f, g, _ = _random_pair(rng)
    _, h, _ = _random_pair(rng)
    mg, mh = local_multiplicity(f, g), local_multiplicity(f, h)
    if INFINITE in (mg, mh):
        return
    assert local_multiplicity(f, g * h) == mg + mh


@pytest.mark.parametrize("seed", range(10))
def test_invariance_under_affine_change(seed):
    rng = random.Random(200 + seed)
    f, g, m = _random_pair(rng)
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c:
            break
    images = {"u": u.scale(a) + v.scale(b), "v": u.scale(c) + v.scale(d)}
    assert local_multiplicity(f.substitute(images), g.substitute(images)) == m


def test_projective_multiplicity_at_points():
    f, g = R("y*z - x^2"), R("y")
    assert fulton_multiplicity(f, g, RationalPoint(0, 0, 1)) == 2
    assert fulton_multiplicity(f, g, RationalPoint(1, 0, 1)) == 0
    # a tangency seen in the chart x = 1
    assert fulton_multiplicity(R("x*z - y^2"), R("z"), RationalPoint(1, 0, 0)) == 2


def test_profile_examples():
    two_lines = multiplicity_profile(PlaneCurve.parse("x"), PlaneCurve.parse("y"))
    assert two_lines.multiplicities == (1,) and two_lines.total == 1
    tangent = multiplicity_profile(PlaneCurve.parse("y"), PlaneCurve.parse("y*z - x^2"))
    assert tangent.multiplicities == (2,)
    assert str(tangent) == "2×1"


def test_profile_rejects_common_component():
    with pytest.raises(CommonComponentError):
        multiplicity_profile(PlaneCurve.parse("x*y"), PlaneCurve.parse("x*z"))


def test_profile_of_worked_pair():
    x, y, z = R.gens
    F = x**3 + y**3 + z**3
    d6 = (z - 2 * y) ** 2 * y * F + (z - 2 * x) ** 2 * x * F + (x - y) ** 2 * (x - 2 * y) ** 2 * x * y
    prof = multiplicity_profile(PlaneCurve(x * y * F), PlaneCurve(d6), random.Random(0))
    assert prof.multiplicities == (2,) * 15
    assert prof.total == 30


def test_profile_with_points_at_infinity_and_higher_contact():
    # cusp y^2 z = x^3 against its cuspidal tangent y = 0: contact 3 at (0:0:1)
    prof = multiplicity_profile(PlaneCurve.parse("y^2*z - x^3"), PlaneCurve.parse("y"))
    assert prof.multiplicities == (3,)
    # the line at infinity z = 0 is the inflectional tangent at (0:1:0)
    prof = multiplicity_profile(PlaneCurve.parse("y^2*z - x^3"), PlaneCurve.parse("z"))
    assert prof.multiplicities == (3,)


def test_profile_is_seed_independent():
    f = PlaneCurve.parse("x^3 + y^3 + z^3")
    g = PlaneCurve.parse("(x - y)^2*(x + y) + z^3")
    profiles = {multiplicity_profile(f, g, random.Random(s)).multiplicities for s in range(4)}
    assert len(profiles) == 1


def test_local_multiplicity_needs_two_variables():
    with pytest.raises(ValueError):
        local_multiplicity(R("x"), R("y"))
