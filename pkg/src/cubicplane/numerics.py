"""Integer bookkeeping for the tower of fibrations over |kH| on a degree-2 K3 surface."""

from __future__ import annotations

from dataclasses import dataclass

K_MAX = 10**6
EXCLUDED_K = 6


class InadmissibleK(ValueError):
    pass


@dataclass(frozen=True)
class DimensionTower:
    k: int
    dim_linear_system: int
    p_a: int
    delta: int
    dim_V: int
    dim_calV: int
    g_normalization: int
    g_plane_curve: int
    prym_dim: int
    moduli_dim: int

    def as_tuple(self) -> tuple[int, ...]:
        return (
            self.dim_linear_system,
            self.p_a,
            self.delta,
            self.dim_V,
            self.dim_calV,
            self.g_normalization,
            self.g_plane_curve,
            self.prym_dim,
            self.moduli_dim,
        )

    @property
    def severi_codimension(self) -> int:
        return self.dim_linear_system - self.dim_V


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("k must be an integer")
    if k == EXCLUDED_K:
        raise InadmissibleK(
            "k = 6 is excluded: there a curve of |6H| could split off a component in |3H| "
            "of the same genus, so the nodal curves need not be integral"
        )
    if k < 4:
        raise InadmissibleK(f"k = {k} is too small (need k >= 4)")
    if k > K_MAX:
        raise InadmissibleK(f"k = {k} exceeds the cap {K_MAX}")


def dimension_tower(k: int) -> DimensionTower:
    _check_k(k)
    p_a = k * k + 1
    delta = 3 * k
    assert (k * k - 3 * k) % 2 == 0
    dim_V = k * k - 3 * k + 1
    dim_calV = (k * k - 3 * k) // 2
    g_norm = p_a - delta
    g_plane = (k - 1) * (k - 2) // 2
    t = DimensionTower(
        k=k,
        dim_linear_system=k * k + 1,
        p_a=p_a,
        delta=delta,
        dim_V=dim_V,
        dim_calV=dim_calV,
        g_normalization=g_norm,
        g_plane_curve=g_plane,
        prym_dim=g_norm - g_plane,
        moduli_dim=2 * p_a,
    )
    # each level of the tower: fibre dimension equals base dimension
    assert t.prym_dim == t.dim_calV
    assert t.g_normalization == t.dim_V
    assert t.p_a == t.dim_linear_system
    assert t.severi_codimension == t.delta
    return t


@dataclass(frozen=True)
class MukaiVector:
    rank: int
    k: int
    chi: int

    def __str__(self):
        return f"(0, {self.k}H, {self.chi})"


def mukai_chi(k: int, d: int) -> MukaiVector:
    """Mukai vector (0, kH, 1 - p_a + d) of a degree-d sheaf on a curve in |kH|."""
    p_a = k * k + 1
    return MukaiVector(0, k, 1 - p_a + d)


@dataclass(frozen=True)
class RiemannRoch:
    genus: int
    degree: int
    chi: int

    @property
    def h0_lower_bound(self) -> int:
        return max(self.chi, 0)

    @property
    def dim_linear_system_if_h1_vanishes(self) -> int:
        return self.chi - 1


def riemann_roch_curve(g: int, deg: int) -> RiemannRoch:
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return RiemannRoch(g, deg, deg + 1 - g)


@dataclass(frozen=True)
class SplittingCheck:
    k: int
    divisible: bool
    g_component: int | None = None
    g_half_class: int | None = None

    @property
    def splitting_possible(self) -> bool:
        return self.divisible and self.g_component == self.g_half_class


def component_splitting_genus_check(k: int) -> SplittingCheck:
    """Compare the genus forced on a component in |(k/2)H| with the genus of that class.

    Odd k: the class kH is not twice a class (Pic = ZH), so no splitting.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k % 2:
        return SplittingCheck(k, False)
    assert (k * k - 3 * k) % 2 == 0
    return SplittingCheck(k, True, (k * k - 3 * k) // 2 + 1, k * k // 4 + 1)


def two_torsion_rank(g: int) -> int:
    """Rank of the 2-torsion of a genus-g Jacobian, as a vector space over F_2."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return 2 * g
