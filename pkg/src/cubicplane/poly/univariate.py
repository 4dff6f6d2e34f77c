"""Dense univariate polynomials over QQ.

Coefficient lists run from the constant term upward and carry no trailing
zeros; ``[]`` is the zero polynomial.  These are the working representation
for the elimination steps of the curve algorithms, where the sparse
``MultiPoly`` machinery would only add overhead.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .fields import QQ
from .multipoly import MultiPoly

Dense = list


def trim(a: Dense) -> Dense:
    a = [QQ(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: Dense) -> int:
    return len(a) - 1


def add(a: Dense, b: Dense) -> Dense:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: Dense, b: Dense) -> Dense:
    return add(a, [-c for c in b])


def mul(a: Dense, b: Dense) -> Dense:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a: Dense, c) -> Dense:
    return trim([x * c for x in a])


def divmod_(a: Dense, b: Dense) -> tuple[Dense, Dense]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = QQ.div(a[-1], lb)
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[i + s] = QQ(a[i + s] - c * y)
        a = trim(a)
    return trim(q), a


def rem(a: Dense, b: Dense) -> Dense:
    return divmod_(a, b)[1]


def monic(a: Dense) -> Dense:
    if not a:
        return a
    return scale(a, Fraction(1) / a[-1])


def gcd(a: Dense, b: Dense) -> Dense:
    """Monic gcd by Euclid over QQ (primitive integer remainders keep numbers small)."""
    a, b = _prim(a), _prim(b)
    while b:
        a, b = b, _prim(rem(a, b))
    return monic(a)


def _prim(a: Dense) -> Dense:
    if not a:
        return a
    from math import gcd as igcd, lcm

    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    return [c // g for c in ints]


def inverse_mod(c: Dense, m: Dense) -> Dense:
    """Inverse of ``c`` modulo ``m`` (they must be coprime)."""
    r0, r1 = m, rem(c, m)
    s0, s1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if deg(r0) != 0:
        raise ZeroDivisionError("not invertible modulo m")
    return rem(scale(s0, Fraction(1) / r0[0]), m)


def derivative(a: Dense) -> Dense:
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a: Dense, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return QQ(acc)


def squarefree_part(a: Dense) -> Dense:
    if deg(a) <= 0:
        return monic(a)
    return monic(divmod_(a, gcd(a, derivative(a)))[0])


def from_multipoly(p: MultiPoly, var: str) -> Dense:
    others = [v for v in p.variables_present() if v != var]
    if others:
        raise ValueError(f"expected a polynomial in {var} only, found {others}")
    i = p.vars.index(var)
    out = [0] * (p.degree(var) + 1 if p else 0)
    for e, c in p.terms.items():
        out[e[i]] = c
    return trim(out)


def to_multipoly(a: Dense, var: str, vars) -> MultiPoly:
    vars = tuple(vars)
    i = vars.index(var)
    n = len(vars)
    return MultiPoly({tuple(k if j == i else 0 for j in range(n)): c for k, c in enumerate(a)}, vars)


# -- real and rational roots ------------------------------------------------


def _sign_changes(seq: Dense, x) -> int:
    signs = [s for s in (evaluate(p, x) for p in seq) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def sturm_sequence(a: Dense) -> list[Dense]:
    seq = [a, derivative(a)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(scale(r, -1))
    return seq


def rational_roots(a: Dense) -> list[Fraction]:
    """All rational roots of a nonzero polynomial, sorted.

    For a primitive integer polynomial with leading coefficient ``lc`` every
    rational root is ``n / lc`` for an integer ``n``; real roots are isolated
    with a Sturm sequence until each interval holds at most one such value.
    """
    if deg(a) <= 0:
        return []
    f = _prim(squarefree_part(a))
    lc = abs(f[-1])
    out = []
    if f[0] == 0:
        out.append(Fraction(0))
        f = f[1:]
        if deg(f) <= 0:
            return out
    seq = sturm_sequence(f)
    bound = 1 + max(abs(Fraction(c, f[-1])) for c in f[:-1])
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if n == 0:
            continue
        if n == 1 and (hi - lo) * lc < 1:
            k = ceil(lo * lc)
            if k == lo * lc:
                k += 1
            if Fraction(k, lc) <= hi and evaluate(f, Fraction(k, lc)) == 0:
                out.append(Fraction(k, lc))
            continue
        mid = (lo + hi) / 2
        if evaluate(f, mid) == 0:
            mid = mid + (hi - lo) / 7
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def count_real_roots(a: Dense) -> int:
    if deg(a) <= 0:
        return 0
    f = squarefree_part(a)
    seq = sturm_sequence(f)
    bound = 1 + max(abs(Fraction(c) / f[-1]) for c in f[:-1]) if deg(f) > 0 else 1
    return _sign_changes(seq, -bound) - _sign_changes(seq, bound)


# -- gcd over Q[x]/(m) with splitting ----------------------------------------
#
# A polynomial in y is a list of Dense coefficients (polynomials in x).  The
# modulus m is squarefree; whenever a leading coefficient is a zero divisor
# mod m, m is split and both branches continue.  Every returned branch
# (m_i, h_i) has h_i monic in y, so h_i specializes with constant degree at
# every root of m_i.

YPoly = list


def _reduce(a: YPoly, m: Dense) -> YPoly:
    out = [rem(c, m) for c in a]
    while out and not out[-1]:
        out.pop()
    return out


def _normalize(a: YPoly, m: Dense) -> list[tuple[Dense, YPoly]]:
    a = _reduce(a, m)
    if not a:
        return [(m, [])]
    g = gcd(a[-1], m)
    if deg(g) == 0:
        inv = inverse_mod(a[-1], m)
        return [(m, [rem(mul(inv, c), m) for c in a])]
    other = monic(divmod_(m, g)[0])
    return _normalize(a, g) + _normalize(a, other)


def _rem_monic(a: YPoly, b: YPoly, m: Dense) -> YPoly:
    a = list(a)
    while len(a) >= len(b) and a:
        c = a[-1]
        s = len(a) - len(b)
        for i, bi in enumerate(b):
            a[i + s] = rem(sub(a[i + s], mul(c, bi)), m)
        while a and not a[-1]:
            a.pop()
    return a


def _gcd2(a: YPoly, b: YPoly, m: Dense) -> list[tuple[Dense, YPoly]]:
    out = []
    for m1, a1 in _normalize(a, m):
        for m2, b1 in _normalize(b, m1):
            a2 = _reduce(a1, m2)
            if not b1:
                out.append((m2, a2))
            elif not a2:
                out.append((m2, b1))
            else:
                if len(a2) < len(b1):
                    a2, b1 = b1, a2
                out.extend(_gcd2(b1, _rem_monic(a2, b1, m2), m2))
    return out


def gcd_over_quotient(polys: list[YPoly], m: Dense) -> list[tuple[Dense, YPoly]]:
    """gcd in y of ``polys`` over Q[x]/(m), split into branches of m."""
    m = monic(m)
    branches = [(m, polys[0])]
    for p in polys[1:]:
        nxt = []
        for mi, h in branches:
            nxt.extend(_gcd2(h, p, mi))
        branches = nxt
    out = []
    for mi, h in branches:
        out.extend(_normalize(h, mi))
    return out
