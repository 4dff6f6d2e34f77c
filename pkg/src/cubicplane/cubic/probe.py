"""Smoothness of hypersurfaces by exhaustive search over small prime fields.

Finding no singular F_p-point of the reduction is evidence, not proof: a
singular point may only be defined over an extension of F_p.  Such outcomes
are reported as ``probabilistic-pass`` together with the primes used.  A
singular F_p-point whose centred lift is singular over Q is a definitive
failure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..poly.multipoly import MultiPoly

DEFAULT_PRIMES = (7, 11)
MAX_LIFTS = 64


class Status(enum.Enum):
    PASS = "pass"
    PROBABILISTIC_PASS = "probabilistic-pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"

    @property
    def passed(self) -> bool:
        return self in (Status.PASS, Status.PROBABILISTIC_PASS)


class BadPrimeError(ValueError):
    """The prime is too small or collides with the coefficients."""


@dataclass(frozen=True)
class ProbeVerdict:
    status: Status
    primes: tuple[int, ...]
    smooth_primes: tuple[int, ...] = ()
    singular_counts: dict = field(default_factory=dict)
    witness: tuple | None = None

    def __bool__(self):
        return self.status.passed


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _integer_form(F: MultiPoly) -> MultiPoly:
    if not F:
        raise ValueError("the zero polynomial defines no hypersurface")
    if not F.is_homogeneous():
        raise ValueError("expected a homogeneous form")
    return F.primitive()


def validate_prime(p: int) -> None:
    if not _is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    if p <= 3:
        raise BadPrimeError(f"p = {p} is too small: characteristic 2 and 3 are excluded")


def check_prime(F: MultiPoly, p: int) -> None:
    validate_prime(p)
    G = _integer_form(F)
    if all(int(c) % p == 0 for c in G.terms.values()):
        raise BadPrimeError(f"{p} divides every coefficient")
    if G.degree() % p == 0:
        raise BadPrimeError(f"{p} divides the degree")


def projective_points(n: int, p: int) -> np.ndarray:
    """All points of P^{n-1}(F_p), one normalized representative per row."""
    blocks = []
    for lead in range(n):
        free = n - lead - 1
        tail = np.indices((p,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
        block = np.zeros((tail.shape[0], n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = tail
        blocks.append(block)
    return np.concatenate(blocks)


def _evaluate_mod(q: MultiPoly, powers: list[list[np.ndarray]], p: int, npts: int) -> np.ndarray:
    acc = np.zeros(npts, dtype=np.int64)
    for e, c in q.terms.items():
        c = int(c) % p
        if not c:
            continue
        t = np.full(npts, c, dtype=np.int64)
        for i, a in enumerate(e):
            if a:
                t = (t * powers[i][a]) % p
        acc = (acc + t) % p
    return acc


def singular_points_mod_p(F: MultiPoly, p: int) -> np.ndarray:
    """Rows of P^{n-1}(F_p) where F and every partial derivative vanish."""
    G = _integer_form(F)
    n = len(G.vars)
    pts = projective_points(n, p)
    npts = pts.shape[0]
    d = G.degree()
    powers = []
    for i in range(n):
        col = [np.ones(npts, dtype=np.int64)]
        for _ in range(d):
            col.append((col[-1] * pts[:, i]) % p)
        powers.append(col)
    mask = np.ones(npts, dtype=bool)
    for q in [G] + [G.derivative(v) for v in G.vars]:
        if q:
            mask &= _evaluate_mod(q, powers, p, npts) == 0
            if not mask.any():
                break
    return pts[mask]


def _centred(row, p: int) -> tuple[int, ...]:
    return tuple(int(a) - p if a > p // 2 else int(a) for a in row)


def is_singular_point(F: MultiPoly, point) -> bool:
    pt = tuple(Fraction(a) for a in point)
    return F.evaluate(pt) == 0 and all(F.derivative(v).evaluate(pt) == 0 for v in F.vars)


def hypersurface_smoothness_probe(F: MultiPoly, primes=DEFAULT_PRIMES, max_lifts: int = MAX_LIFTS) -> ProbeVerdict:
    """Search the reductions of ``F`` modulo each prime for singular points."""
    primes = tuple(primes)
    if not primes:
        raise ValueError("at least one prime is required")
    for p in primes:
        check_prime(F, p)
    G = _integer_form(F)
    smooth, counts = [], {}
    for p in primes:
        sing = singular_points_mod_p(G, p)
        counts[p] = int(sing.shape[0])
        if not counts[p]:
            smooth.append(p)
            continue
        for row in sing[:max_lifts]:
            lift = _centred(row, p)
            if is_singular_point(G, lift):
                return ProbeVerdict(Status.FAIL, primes, tuple(smooth), counts, lift)
    status = Status.PROBABILISTIC_PASS if smooth else Status.INCONCLUSIVE
    return ProbeVerdict(status, primes, tuple(smooth), counts)


def fourfold_smoothness_probe(X, primes=DEFAULT_PRIMES) -> ProbeVerdict:
    """Probe for the cubic fourfold of a :class:`GramCubic` (or any form)."""
    F = X if isinstance(X, MultiPoly) else X.form
    return hypersurface_smoothness_probe(F, primes)
