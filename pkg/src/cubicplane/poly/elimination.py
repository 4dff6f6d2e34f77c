"""Resultants, gcds and squarefree decomposition.

Univariate polynomials over a coefficient ring are handled as lists of
``MultiPoly`` coefficients (index = power), the ring being the polynomials in
the remaining variables.
"""

from __future__ import annotations

from .fields import PrimeField, RationalField
from .matrix import PolyMatrix, determinant
from .multipoly import ContextError, MultiPoly

UPoly = list  # list[MultiPoly], low degree first, no trailing zeros


def _trim(a: UPoly) -> UPoly:
    while a and not a[-1]:
        a.pop()
    return a


def _deg(a: UPoly) -> int:
    return len(a) - 1


def _sub_scaled(a: UPoly, b: UPoly, c: MultiPoly, shift: int) -> UPoly:
    """a - c * X^shift * b."""
    out = list(a) + [c * 0] * max(0, len(b) + shift - len(a))
    for i, bi in enumerate(b):
        if bi:
            out[i + shift] = out[i + shift] - c * bi
    return _trim(out)


def _prem(a: UPoly, b: UPoly) -> UPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    lb = b[-1]
    e = _deg(a) - _deg(b) + 1
    r = list(a)
    while r and _deg(r) >= _deg(b):
        la = r[-1]
        shift = _deg(r) - _deg(b)
        r = [x * lb for x in r]
        r = _sub_scaled(r, b, la, shift)
        e -= 1
    if e > 0:
        f = lb**e
        r = [x * f for x in r]
    return _trim(r)


def _subresultant_last(a: UPoly, b: UPoly) -> UPoly:
    """Last nonzero element of the subresultant PRS of ``a`` and ``b`` (deg a >= deg b >= 0)."""
    if _deg(a) < _deg(b):
        a, b = b, a
    one = a[0] * 0 + 1
    g = one
    h = one
    while True:
        delta = _deg(a) - _deg(b)
        r = _prem(a, b)
        if not r:
            return b
        if _deg(r) == 0:
            return r
        div = g * h**delta
        a, b = b, [x.exact_div(div) for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).exact_div(h ** (delta - 1))


def _ring_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """gcd up to a unit, by recursion on variables."""
    if not p:
        return q
    if not q:
        return p
    if p.is_constant() or q.is_constant():
        return MultiPoly.constant(1, p.vars, p.field)
    present = [v for v in p.vars if p.degree(v) > 0 or q.degree(v) > 0]
    var = present[-1]
    pc = p.coefficients_in(var)
    qc = q.coefficients_in(var)
    cp = _list_gcd(pc)
    cq = _list_gcd(qc)
    c = _ring_gcd(cp, cq)
    pp = [x.exact_div(cp) for x in pc]
    qp = [x.exact_div(cq) for x in qc]
    if _deg(pp) == 0 or _deg(qp) == 0:
        h = [c * 0 + 1]
    else:
        h = _subresultant_last(pp, qp)
        h = [x.exact_div(_list_gcd(h)) for x in h]
    h = [x * c for x in h]
    return MultiPoly.from_coefficients(h, var, p.vars)


def _list_gcd(items: list[MultiPoly]) -> MultiPoly:
    acc = None
    for x in items:
        if not x:
            continue
        acc = x if acc is None else _ring_gcd(acc, x)
        if acc.is_constant():
            return MultiPoly.constant(1, x.vars, x.field)
    if acc is None:
        return items[0] * 0
    return acc


def normalize(p: MultiPoly) -> MultiPoly:
    """Primitive integer form with positive leading coefficient (QQ) or monic (GF(p))."""
    return p.primitive()


def _check_pair(f: MultiPoly, g: MultiPoly):
    if f.vars != g.vars:
        raise ContextError(f"variable contexts differ: {f.vars} vs {g.vars}")
    if f.field != g.field:
        raise ContextError(f"fields differ: {f.field} vs {g.field}")


def gcd_poly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Normalized greatest common divisor.

    Content/primitive-part recursion on variables with the subresultant PRS in
    the main variable.  Homogeneous inputs are dehomogenized along the last
    variable first, which keeps the recursion one variable shorter.
    """
    _check_pair(f, g)
    if not f:
        return normalize(g)
    if not g:
        return normalize(f)
    if len(f.vars) >= 2 and f.is_homogeneous() and g.is_homogeneous():
        return _homogeneous_gcd(f, g)
    return normalize(_ring_gcd(f, g))


def _homogeneous_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    z = f.vars[-1]
    a, b = f.min_degree(z), g.min_degree(z)
    h = _ring_gcd(f.substitute({z: 1}), g.substitute({z: 1}))
    d = h.degree()
    zi = f.vars.index(z)
    out = {}
    for e, c in h.terms.items():
        k = list(e)
        k[zi] += d - sum(e)
        out[tuple(k)] = c
    hz = MultiPoly(out, f.vars, f.field)
    hz = hz * MultiPoly.variable(z, f.vars, f.field) ** min(a, b)
    return normalize(hz)


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant eliminating ``var``, returned in the input context.

    With m = deg_var f and n = deg_var g the Sylvester matrix has n shifted
    rows of f's coefficients followed by m shifted rows of g's.
    """
    _check_pair(f, g)
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    m, n = _deg(fc), _deg(gc)
    rest = fc[0].vars
    if m + n == 0:
        return MultiPoly.constant(1, f.vars, f.field)
    size = m + n
    zero = MultiPoly.zero(rest, f.field)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    r = determinant(PolyMatrix(rows, rest, f.field))
    return r.with_vars(f.vars)


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> PolyMatrix:
    fc, gc = f.coefficients_in(var), g.coefficients_in(var)
    m, n = _deg(fc), _deg(gc)
    rest = fc[0].vars
    zero = MultiPoly.zero(rest, f.field)
    rows = []
    for coeffs, count in ((fc, n), (gc, m)):
        for i in range(count):
            row = [zero] * (m + n)
            for k, c in enumerate(reversed(coeffs)):
                row[i + k] = c
            rows.append(row)
    return PolyMatrix(rows, rest, f.field)


def squarefree_decompose(f: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Yun's algorithm for a univariate polynomial.

    Returns ``[(a_1, e_1), ...]`` with monic, squarefree, pairwise coprime
    nonconstant ``a_i`` and strictly increasing ``e_i`` such that
    ``f = lc(f) * prod(a_i ** e_i)``.
    """
    if not f:
        raise ValueError("squarefree decomposition of zero")
    present = f.variables_present()
    if len(present) > 1:
        raise ValueError(f"squarefree_decompose needs a univariate polynomial, got variables {present}")
    if not isinstance(f.field, RationalField):
        raise TypeError("squarefree_decompose works over QQ")
    if not present:
        return []
    x = present[0]
    out = []
    fp = f.derivative(x)
    a0 = gcd_poly(f, fp)
    b = f.exact_div(a0)
    c = fp.exact_div(a0)
    d = c - b.derivative(x)
    i = 1
    while b.degree() > 0:
        a = gcd_poly(b, d)
        if a.degree() > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative(x)
        i += 1
    return out


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """Product of the distinct monic factors of a univariate polynomial."""
    out = MultiPoly.constant(1, f.vars, f.field)
    for a, _ in squarefree_decompose(f):
        out = out * a
    return out


def reduce_mod_p(f: MultiPoly, p: int) -> MultiPoly:
    """Reduce a rational polynomial mod ``p`` (p must not divide a denominator)."""
    return f.to_field(PrimeField(p))
