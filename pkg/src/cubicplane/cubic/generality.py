"""The four generality conditions on a triple (X, P, H), checked one by one."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..curves.curve import PlaneCurve
from ..curves.intersection import CommonComponentError, multiplicity_profile
from ..curves.nodes import is_tritangent
from ..curves.smoothness import is_smooth
from ..poly.elimination import gcd_poly
from .gram import (
    STANDARD_HYPERPLANE,
    DegenerateBundleError,
    GramCubic,
    HyperplaneSpec,
    QUADRIC_NAMES,
    discriminant_quintic,
    discriminant_sextic,
    hyperplane_section,
    line_first_type,
)
from .probe import DEFAULT_PRIMES, BadPrimeError, Status, hypersurface_smoothness_probe, validate_prime

CHECKS = (
    "i.X_smooth",
    "i.D6_smooth",
    "ii.tritangent",
    "iii.Y_smooth",
    "iii.DH_smooth",
    "iii.L_first_type",
    "iv.mult_le_2",
)
CONDITIONS = ("i", "ii", "iii", "iv")


@dataclass
class CheckOptions:
    checks: Sequence[str] | None = None  # names or condition prefixes; None runs everything
    primes: Sequence[int] = DEFAULT_PRIMES
    lines: Sequence[PlaneCurve] = ()
    seed: int = 0

    def __post_init__(self):
        if not self.primes:
            raise BadPrimeError("at least one prime is needed")
        for p in self.primes:
            validate_prime(p)

    def selected(self, name: str) -> bool:
        if self.checks is None:
            return True
        cond = name.split(".", 1)[0]
        return name in self.checks or cond in self.checks


@dataclass
class CheckResult:
    name: str
    status: Status
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0


@dataclass
class GeneralityReport:
    results: list[CheckResult]
    seed: int

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def condition(self, cond: str) -> Status:
        return _combine([r.status for r in self.results if r.name.split(".", 1)[0] == cond])

    @property
    def overall(self) -> Status:
        return _combine([r.status for r in self.results])


def _combine(statuses: list[Status]) -> Status:
    active = [s for s in statuses if s is not Status.SKIPPED]
    if not active:
        return Status.SKIPPED
    for s in (Status.FAIL, Status.INCONCLUSIVE, Status.PROBABILISTIC_PASS):
        if s in active:
            return s
    return Status.PASS


def _probe_detail(v) -> dict:
    d = {"primes": ",".join(map(str, v.primes))}
    if v.smooth_primes:
        d["smooth_mod"] = ",".join(map(str, v.smooth_primes))
    d["singular_Fp_points"] = ",".join(f"{p}:{n}" for p, n in v.singular_counts.items())
    if v.witness is not None:
        d["witness"] = "(" + ":".join(map(str, v.witness)) + ")"
    return d


def _smooth_curve_check(curve: PlaneCurve, seed: int) -> tuple[Status, dict]:
    cert = is_smooth(curve, random.Random(seed))
    detail = {"curve": str(curve)}
    if cert:
        return Status.PASS, detail
    detail.update(cert.witness)
    return Status.FAIL, detail


class _Context:
    """Lazily computed discriminants shared by the checks."""

    def __init__(self, X: GramCubic, H: HyperplaneSpec):
        self.X, self.H = X, H
        self._d6 = self._dh = None

    @property
    def d6(self) -> PlaneCurve:
        if self._d6 is None:
            self._d6 = discriminant_sextic(self.X)
        return self._d6

    @property
    def dh(self) -> PlaneCurve:
        if self._dh is None:
            self._dh = discriminant_quintic(self.X, self.H)
        return self._dh


def _x_smooth(ctx: _Context, opts: CheckOptions):
    v = hypersurface_smoothness_probe(ctx.X.form, opts.primes)
    return v.status, _probe_detail(v)


def _y_smooth(ctx: _Context, opts: CheckOptions):
    v = hypersurface_smoothness_probe(hyperplane_section(ctx.X, ctx.H), opts.primes)
    return v.status, _probe_detail(v)


def _d6_smooth(ctx: _Context, opts: CheckOptions):
    return _smooth_curve_check(ctx.d6, opts.seed)


def _dh_smooth(ctx: _Context, opts: CheckOptions):
    return _smooth_curve_check(ctx.dh, opts.seed)


def _tritangent(ctx: _Context, opts: CheckOptions):
    if not opts.lines:
        return Status.SKIPPED, {"reason": "no lines supplied"}
    rng = random.Random(opts.seed)
    found = []
    for line in opts.lines:
        try:
            hit = is_tritangent(line, ctx.d6, rng)
        except ValueError:
            hit = False  # a component of D6 is not a tritangent line
        if hit:
            found.append(str(line))
    detail = {"lines_checked": str(len(opts.lines))}
    if found:
        detail["tritangent"] = "; ".join(found)
        return Status.FAIL, detail
    return Status.PASS, detail


def _first_type(ctx: _Context, opts: CheckOptions):
    r = line_first_type(ctx.X, ctx.H)
    rows = [" ".join(str(c) for c in row) for row in r.matrix]
    detail = {
        "rank": str(r.rank),
        "basis": ", ".join(QUADRIC_NAMES),
        "restricted": "; ".join(f"{k}={v}" for k, v in r.restricted.items()),
        "matrix": " | ".join(rows),
        "section_rank": str(r.section_rank),
        "same_span_in_section": str(r.same_span_in_section).lower(),
    }
    return (Status.PASS if r.first_type else Status.FAIL), detail


def _mult_le_2(ctx: _Context, opts: CheckOptions):
    common = gcd_poly(ctx.dh.poly, ctx.d6.poly)
    detail = {"gcd": str(common)}
    if common.degree() > 0:
        detail["reason"] = "common component"
        return Status.FAIL, detail
    try:
        prof = multiplicity_profile(ctx.dh, ctx.d6, random.Random(opts.seed))
    except CommonComponentError as exc:
        detail["reason"] = str(exc)
        return Status.FAIL, detail
    detail["profile"] = str(prof)
    detail["total"] = str(prof.total)
    detail["max"] = str(prof.max_multiplicity)
    return (Status.PASS if prof.max_multiplicity <= 2 else Status.FAIL), detail


_RUNNERS: dict[str, Callable] = {
    "i.X_smooth": _x_smooth,
    "i.D6_smooth": _d6_smooth,
    "ii.tritangent": _tritangent,
    "iii.Y_smooth": _y_smooth,
    "iii.DH_smooth": _dh_smooth,
    "iii.L_first_type": _first_type,
    "iv.mult_le_2": _mult_le_2,
}


def check_generality(
    X: GramCubic, H: HyperplaneSpec = STANDARD_HYPERPLANE, options: CheckOptions | None = None
) -> GeneralityReport:
    """Run the selected checks; each one is independent and deterministic given the seed.

    A check that cannot be carried out (for instance a discriminant vanishing
    identically) is marked as failed with the reason, the others still run.
    """
    opts = options or CheckOptions()
    if opts.checks is not None:
        unknown = [c for c in opts.checks if c not in CHECKS and c not in CONDITIONS]
        if unknown:
            raise ValueError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    ctx = _Context(X, H)
    results = []
    for name in CHECKS:
        if not opts.selected(name):
            results.append(CheckResult(name, Status.SKIPPED, {"reason": "not requested"}))
            continue
        start = time.perf_counter()
        try:
            status, detail = _RUNNERS[name](ctx, opts)
        except DegenerateBundleError as exc:
            status, detail = Status.FAIL, {"reason": str(exc)}
        results.append(CheckResult(name, status, detail, time.perf_counter() - start))
    return GeneralityReport(results, opts.seed)
