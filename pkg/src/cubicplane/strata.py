"""Orbit stratification of the compactified Jacobian of a nodal curve, numerically.

Strata are indexed by the number m of nodes at which a sheaf fails to be
locally free.  Nothing here is a scheme: each stratum is recorded by its
count, dimension and local-ring shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .numerics import dimension_tower

DELTA_MAX = 64
GLUING = "P^1-bundles with sections s0 and s_inf glued by translation by O(x_i - y_i)"


@dataclass(frozen=True)
class NodalCurveModel:
    p_a: int
    delta: int

    def __post_init__(self):
        if self.delta < 0 or self.p_a < 0:
            raise ValueError("p_a and delta must be nonnegative")
        if self.delta > self.p_a:
            raise ValueError(f"delta = {self.delta} exceeds p_a = {self.p_a}")
        if self.delta > DELTA_MAX:
            raise ValueError(f"delta is capped at {DELTA_MAX}")

    @property
    def g(self) -> int:
        return self.p_a - self.delta


@dataclass(frozen=True)
class Stratum:
    m: int
    count: int
    orbit_dim: int
    codim: int
    tangent_dim: int

    @property
    def smooth(self) -> bool:
        return self.m == 0

    @property
    def signature(self) -> str:
        """Shape of the completed local ring: m node factors times a power series ring."""
        smooth = f"C[[T_1..T_{self.orbit_dim}]]" if self.orbit_dim else "C"
        if not self.m:
            return smooth
        return f"(C[[X,Y]]/(XY))^{self.m} (x) {smooth}"

    @property
    def embedding_dim(self) -> int:
        return 2 * self.m + self.orbit_dim


def stratify(model: NodalCurveModel) -> list[Stratum]:
    pa, d = model.p_a, model.delta
    return [Stratum(m, comb(d, m), pa - m, m, pa + m) for m in range(d + 1)]


@dataclass(frozen=True)
class TangentDecomposition:
    normalization: int
    resolution_vectors: int
    remaining: int

    @property
    def total(self) -> int:
        return self.normalization + self.resolution_vectors + self.remaining

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.normalization, self.resolution_vectors, self.remaining)


def tangent_decomposition(model: NodalCurveModel, m: int) -> TangentDecomposition:
    if not 0 <= m <= model.delta:
        raise ValueError(f"m = {m} outside 0..{model.delta}")
    return TangentDecomposition(model.g, 2 * m, model.delta - m)


@dataclass(frozen=True)
class ResolutionModel:
    fibre_factors: int  # the fibre is (P^1)^delta
    base_dim: int
    total_dim: int
    gluing: str = GLUING

    @property
    def fibre(self) -> str:
        return f"(P^1)^{self.fibre_factors}"


def resolution_model(model: NodalCurveModel) -> ResolutionModel:
    r = ResolutionModel(model.delta, model.g, model.delta + model.g)
    assert r.total_dim == model.p_a
    return r


@dataclass(frozen=True)
class TangentBudget:
    moduli_tangent: int  # 2 p_a
    image_dim: int  # dim T
    fibre_part: int  # g = p_a - delta
    node_part: int  # 2 delta

    @property
    def balanced(self) -> bool:
        return self.moduli_tangent == self.image_dim + self.fibre_part + self.node_part


def tangent_budget(p_a: int, delta: int) -> TangentBudget:
    """Split 2p_a at a sheaf singular at every node: dim T + g + 2 delta with dim T = p_a - delta."""
    model = NodalCurveModel(p_a, delta)
    b = TangentBudget(2 * p_a, p_a - delta, model.g, 2 * delta)
    if not b.balanced:
        raise ArithmeticError("tangent budget does not balance")
    return b


def moduli_tangent_budget(k: int) -> TangentBudget:
    t = dimension_tower(k)
    b = tangent_budget(t.p_a, t.delta)
    assert b.image_dim == t.dim_V
    return b
