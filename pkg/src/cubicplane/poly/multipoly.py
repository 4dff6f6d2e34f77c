"""Sparse exact multivariate polynomials.

A :class:`MultiPoly` is a mapping from exponent tuples to nonzero scalars, tied
to an ordered tuple of variable names and a coefficient field.  Instances are
immutable; every operation returns a new polynomial.

Terms iterate and print in graded reverse lexicographic order, largest first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Sequence

from .fields import QQ, PrimeField, RationalField, Scalar

Exponent = tuple[int, ...]


class ContextError(ValueError):
    """Raised when polynomials from different variable contexts or fields meet."""


def grevlex_key(e: Exponent):
    return (sum(e), tuple(-a for a in reversed(e)))


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i + j for i, j in zip(a, b))


class MultiPoly:
    __slots__ = ("vars", "terms", "field", "_hash")

    def __init__(self, terms: Mapping[Exponent, object], vars: Sequence[str], field=QQ, *, _trusted=False):
        self.vars = tuple(vars)
        self.field = field
        self._hash = None
        if _trusted:
            self.terms = dict(terms)
            return
        n = len(self.vars)
        clean: dict[Exponent, Scalar] = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise ContextError(f"exponent {e} does not match variables {self.vars}")
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {e}")
            c = field(c)
            if c:
                c = field(clean.get(e, 0) + c)
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str], field=QQ) -> "MultiPoly":
        return cls({}, vars, field, _trusted=True)

    @classmethod
    def constant(cls, c, vars: Sequence[str], field=QQ) -> "MultiPoly":
        c = field(c)
        n = len(tuple(vars))
        return cls({(0,) * n: c} if c else {}, vars, field, _trusted=True)

    @classmethod
    def variable(cls, name: str, vars: Sequence[str], field=QQ) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise KeyError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls({e: field(1)}, vars, field, _trusted=True)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.vars), self.field(0))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``.  The zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return min(sum(e) for e in self.terms)
        i = self._index(var)
        return min(e[i] for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1 and (degree is None or degs == {degree})

    def variables_present(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}; context is {self.vars}") from None

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponent, Scalar]]:
        return iter(self.sorted_terms())

    def leading_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> Scalar:
        return self.terms[self.leading_exponent()]

    def coefficient(self, exponent: Exponent) -> Scalar:
        return self.terms.get(tuple(exponent), self.field(0))

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ContextError(f"variable contexts differ: {self.vars} vs {other.vars}")
            if other.field != self.field:
                raise ContextError(f"fields differ: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.vars, self.field)
        return NotImplemented

    def _new(self, terms) -> "MultiPoly":
        return MultiPoly(terms, self.vars, self.field, _trusted=True)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f(out.get(e, 0) + c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return self._new({e: f(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out: dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return self._new({e: c for e, c in ((e, f(c)) for e, c in out.items()) if c})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        f = self.field
        c = f(c)
        if not c:
            return MultiPoly.zero(self.vars, f)
        return self._new({e: f(v * c) for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.div(1, self.field(other)))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.exact_div(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == self.field(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.field, frozenset(self.terms.items())))
        return self._hash

    # -- division ----------------------------------------------------------

    def divmod(self, divisor: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by a single divisor in grevlex order."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        lm = divisor.leading_exponent()
        lc = divisor.terms[lm]
        rest = {e: c for e, c in divisor.terms.items() if e != lm}
        p = dict(self.terms)
        q: dict[Exponent, Scalar] = {}
        r: dict[Exponent, Scalar] = {}
        while p:
            e = max(p, key=grevlex_key)
            c = p.pop(e)
            shift = tuple(a - b for a, b in zip(e, lm))
            if any(s < 0 for s in shift):
                r[e] = c
                continue
            t = f.div(c, lc)
            q[shift] = t
            for e2, c2 in rest.items():
                k = _add_exp(e2, shift)
                v = f(p.get(k, 0) - t * c2)
                if v:
                    p[k] = v
                else:
                    p.pop(k, None)
        return self._new(q), self._new(r)

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def divides(self, other: "MultiPoly") -> bool:
        return not other.divmod(self)[1]

    # -- calculus and substitution ------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self._index(var)
        f = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                k = e[:i] + (e[i] - 1,) + e[i + 1:]
                v = f(c * e[i])
                if v:
                    out[k] = v
        return self._new(out)

    def evaluate(self, point) -> Scalar:
        """Evaluate at ``point`` (a mapping name -> scalar, or a sequence in context order)."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.vars]
        else:
            vals = list(point)
            if len(vals) != len(self.vars):
                raise ContextError("point has the wrong number of coordinates")
        f = self.field
        vals = [f(v) for v in vals]
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t = t * v**a
            total += t
        return f(total)

    def substitute(self, mapping: Mapping[str, object], target_vars: Sequence[str] | None = None) -> "MultiPoly":
        """Replace variables by polynomials or scalars.

        Images must live in ``target_vars`` (default: this context).  Variables
        not in ``mapping`` are kept and must exist in the target context.
        """
        target = tuple(target_vars) if target_vars is not None else self.vars
        f = self.field
        images: list[MultiPoly] = []
        for v in self.vars:
            img = mapping.get(v, None)
            if img is None:
                img = MultiPoly.variable(v, target, f)
            elif not isinstance(img, MultiPoly):
                img = MultiPoly.constant(img, target, f)
            elif img.vars != target:
                raise ContextError(f"image of {v} lives in {img.vars}, expected {target}")
            images.append(img)
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, a):
            key = (i, a)
            if key not in cache:
                cache[key] = images[i] ** a
            return cache[key]

        result = MultiPoly.zero(target, f)
        for e, c in self.terms.items():
            t = MultiPoly.constant(c, target, f)
            for i, a in enumerate(e):
                if a:
                    t = t * power(i, a)
            result = result + t
        return result

    # -- context manipulation --------------------------------------------

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-embed into another variable context (reordering or extending)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        present = self.variables_present()
        missing = [v for v in present if v not in vars]
        if missing:
            raise ContextError(f"variables {missing} used but absent from {vars}")
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        out = {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self.terms.items()}
        return MultiPoly(out, vars, self.field, _trusted=True)

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients of ``var^0, var^1, ...`` as polynomials in the other variables."""
        i = self._index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: dict[int, dict[Exponent, Scalar]] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        n = self.degree(var)
        return [MultiPoly(buckets.get(k, {}), rest, self.field, _trusted=True) for k in range(n + 1)]

    @classmethod
    def from_coefficients(cls, coeffs: Sequence["MultiPoly"], var: str, vars: Sequence[str]) -> "MultiPoly":
        """Inverse of :meth:`coefficients_in`: rebuild from coefficients in ``var``."""
        vars = tuple(vars)
        i = vars.index(var)
        field = coeffs[0].field if coeffs else QQ
        out = {}
        for k, c in enumerate(coeffs):
            for e, v in c.terms.items():
                out[e[:i] + (k,) + e[i:]] = v
        return cls(out, vars, field, _trusted=True)

    def homogeneous_component(self, degree: int) -> "MultiPoly":
        return self._new({e: c for e, c in self.terms.items() if sum(e) == degree})

    # -- content and normalization ---------------------------------------

    def content(self) -> Scalar:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not isinstance(self.field, RationalField):
            raise TypeError("content is defined over QQ only")
        if not self.terms:
            return 0
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return QQ(Fraction(num, den))

    def primitive(self) -> "MultiPoly":
        """Integer-coefficient primitive part with positive leading coefficient (QQ),
        or the monic associate (GF(p))."""
        if not self.terms:
            return self
        if isinstance(self.field, PrimeField):
            return self.monic()
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(Fraction(1) / c)

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        return self.scale(self.field.div(1, self.leading_coefficient()))

    def to_field(self, field) -> "MultiPoly":
        return MultiPoly({e: field(c) for e, c in self.terms.items()}, self.vars, field)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            neg = c < 0 if isinstance(self.field, RationalField) else False
            a = -c if neg else c
            mono = "*".join(
                v if p == 1 else f"{v}^{p}" for v, p in zip(self.vars, e) if p
            )
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, vars={self.vars}, field={self.field!r})"


class PolyRing:
    """Convenience factory for polynomials over a fixed context.

    >>> R = PolyRing("x,y,z")
    >>> x, y, z = R.gens
    >>> str((x + y) ** 2)
    'x^2 + 2*x*y + y^2'
    """

    def __init__(self, vars: str | Sequence[str], field=QQ):
        if isinstance(vars, str):
            vars = [v.strip() for v in vars.split(",") if v.strip()]
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        self.field = field

    @property
    def gens(self) -> tuple[MultiPoly, ...]:
        return tuple(MultiPoly.variable(v, self.vars, self.field) for v in self.vars)

    def __call__(self, value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value.with_vars(self.vars)
        if isinstance(value, str):
            from .parser import parse_poly

            return parse_poly(value, self.vars, self.field)
        return MultiPoly.constant(value, self.vars, self.field)

    def zero(self) -> MultiPoly:
        return MultiPoly.zero(self.vars, self.field)

    def one(self) -> MultiPoly:
        return MultiPoly.constant(1, self.vars, self.field)

    def from_terms(self, terms: Iterable[tuple[Exponent, object]]) -> MultiPoly:
        acc: dict[Exponent, object] = {}
        for e, c in terms:
            acc[tuple(e)] = acc.get(tuple(e), 0) + c
        return MultiPoly(acc, self.vars, self.field)

    def __repr__(self):
        return f"PolyRing({','.join(self.vars)}, {self.field!r})"
