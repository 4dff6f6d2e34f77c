"""Random test data: forms, germ pairs and Gram cubics."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from cubicplane.cubic.gram import COEFF_DEGREES, build_cubic
from cubicplane.poly.multipoly import MultiPoly

PLANE = ("x", "y", "z")
AFFINE = ("u", "v")


def exponents(nvars: int, degree: int):
    if nvars == 1:
        yield (degree,)
        return
    for a in range(degree, -1, -1):
        for rest in exponents(nvars - 1, degree - a):
            yield (a,) + rest


def random_form(rng: random.Random, degree: int, vars_=PLANE, density=0.7, bound=3) -> MultiPoly:
    """Nonzero homogeneous form with small integer coefficients."""
    while True:
        terms = {e: rng.randint(-bound, bound) for e in exponents(len(vars_), degree) if rng.random() < density}
        p = MultiPoly(terms, vars_)
        if p:
            return p


def random_affine(rng: random.Random, max_degree=4, min_order=1, density=0.5, bound=3) -> MultiPoly:
    terms = {}
    for d in range(min_order, max_degree + 1):
        for e in exponents(2, d):
            if rng.random() < density:
                terms[e] = rng.randint(-bound, bound)
    return MultiPoly(terms, AFFINE)


def random_germ_pair(rng: random.Random) -> tuple[MultiPoly, MultiPoly]:
    """A pair of affine curves through the origin, of degree <= 4, mixing generic and tangent contacts."""
    style = rng.randrange(4)
    u = MultiPoly.variable("u", AFFINE)
    v = MultiPoly.variable("v", AFFINE)
    if style == 0:
        f, g = random_affine(rng), random_affine(rng)
    elif style == 1:
        f = random_affine(rng, min_order=rng.choice((1, 2)))
        g = random_affine(rng, min_order=rng.choice((1, 2, 3)))
    elif style == 2:
        # common smooth branch direction, contact of random order
        f = v - random_affine(rng, max_degree=4, min_order=2)
        k = rng.randint(2, 4)
        g = f + random_affine(rng, max_degree=4, min_order=k, density=0.6)
    else:
        f = random_affine(rng, max_degree=3, min_order=rng.choice((1, 2)))
        g = f * (MultiPoly.constant(rng.randint(1, 3), AFFINE) + u.scale(rng.randint(-2, 2)))
        g = g + random_affine(rng, max_degree=4, min_order=rng.randint(2, 4))
        g = MultiPoly({e: c for e, c in g.terms.items() if sum(e) <= 4}, AFFINE)
    return f, g


def random_gram_cubic(rng: random.Random, density=0.7, bound=3):
    return build_cubic({n: random_form(rng, d, density=density, bound=bound) for n, d in COEFF_DEGREES.items()})


# hypothesis strategies

small_ints = st.integers(-5, 5)


@st.composite
def polys(draw, vars_=PLANE, max_degree=3, max_terms=5):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_degree)) for _ in vars_)
        terms[e] = draw(small_ints)
    return MultiPoly(terms, vars_)


@st.composite
def forms(draw, degree, vars_=PLANE):
    exps = list(exponents(len(vars_), degree))
    coeffs = draw(st.lists(small_ints, min_size=len(exps), max_size=len(exps)))
    p = MultiPoly(dict(zip(exps, coeffs)), vars_)
    if not p:
        p = MultiPoly({exps[0]: 1}, vars_)
    return p
