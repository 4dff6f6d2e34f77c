"""Truncated univariate power series and implicit-function jets."""

from __future__ import annotations

from dataclasses import dataclass

from .fields import QQ
from .multipoly import MultiPoly


@dataclass(frozen=True)
class JetSeries:
    """c_0 + c_1 t + ... + c_N t^N  (mod t^(N+1))."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = tuple(self.coeffs)[: self.order + 1]
        cs = cs + (0,) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(QQ(c) for c in cs))

    @classmethod
    def constant(cls, c, order: int) -> "JetSeries":
        return cls(order, (c,))

    @classmethod
    def variable(cls, order: int) -> "JetSeries":
        return cls(order, (0, 1))

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def _lift(self, other) -> tuple["JetSeries", "JetSeries"]:
        if isinstance(other, JetSeries):
            n = min(self.order, other.order)
            return JetSeries(n, self.coeffs), JetSeries(n, other.coeffs)
        return self, JetSeries.constant(other, self.order)

    def __add__(self, other):
        a, b = self._lift(other)
        return JetSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return JetSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, JetSeries) else -QQ(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._lift(other)
        n = a.order
        out = [0] * (n + 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b.coeffs[j]
        return JetSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = JetSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None


def substitute_series(f: MultiPoly, x: JetSeries, y: JetSeries, xvar: str, yvar: str) -> JetSeries:
    """Evaluate the bivariate ``f`` at ``(x(t), y(t))``."""
    n = min(x.order, y.order)
    ix, iy = f.vars.index(xvar), f.vars.index(yvar)
    xp = [JetSeries.constant(1, n)]
    yp = [JetSeries.constant(1, n)]
    total = JetSeries.constant(0, n)
    for e, c in f.terms.items():
        a, b = e[ix], e[iy]
        while len(xp) <= a:
            xp.append(xp[-1] * x)
        while len(yp) <= b:
            yp.append(yp[-1] * y)
        total = total + xp[a] * yp[b] * c
    return total


def implicit_jet(f: MultiPoly, order: int = 8, x: str | None = None, y: str | None = None) -> JetSeries:
    """Series y(x) with f(x, y(x)) = 0 mod x^(order+1), for a curve smooth at the
    origin with non-vertical tangent.

    Coefficients are found one at a time: if y_k is correct mod x^(k+1), the
    x^(k+1) coefficient of f(x, y_k) fixes c_(k+1) through f_y(0, 0).
    """
    if x is None or y is None:
        if len(f.vars) != 2:
            raise ValueError("name the two curve variables for polynomials outside a 2-variable context")
        x, y = f.vars
    others = [v for v in f.variables_present() if v not in (x, y)]
    if others:
        raise ValueError(f"implicit_jet needs a bivariate polynomial; found {others}")
    origin = {v: 0 for v in f.vars}
    if f.evaluate(origin) != 0:
        raise ValueError("curve does not pass through the origin")
    fy = f.derivative(y).evaluate(origin)
    if fy == 0:
        raise ValueError("origin is singular or the tangent is vertical (df/dy = 0)")
    X = JetSeries.variable(order)
    coeffs = [0] * (order + 1)
    for k in range(1, order + 1):
        val = substitute_series(f, X, JetSeries(order, coeffs), x, y)
        coeffs[k] = -QQ.div(val[k], fy)
    return JetSeries(order, coeffs)
