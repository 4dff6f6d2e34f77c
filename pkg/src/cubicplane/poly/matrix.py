"""Dense matrices of polynomials sharing one variable context."""

from __future__ import annotations

from typing import Sequence

from .fields import QQ
from .multipoly import ContextError, MultiPoly


class PolyMatrix:
    __slots__ = ("rows", "vars", "field")

    def __init__(self, rows: Sequence[Sequence[object]], vars: Sequence[str] | None = None, field=None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one entry")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows have different lengths")
        sample = next((e for r in rows for e in r if isinstance(e, MultiPoly)), None)
        if vars is None:
            if sample is None:
                raise ValueError("cannot infer variable context from scalar entries")
            vars = sample.vars
        if field is None:
            field = sample.field if sample is not None else QQ
        self.vars = tuple(vars)
        self.field = field
        self.rows = tuple(tuple(self._entry(e) for e in r) for r in rows)

    def _entry(self, e) -> MultiPoly:
        if isinstance(e, MultiPoly):
            if e.vars != self.vars:
                raise ContextError(f"entry context {e.vars} differs from {self.vars}")
            return e
        return MultiPoly.constant(e, self.vars, self.field)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij) -> MultiPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self.rows)), self.vars, self.field)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = MultiPoly.zero(self.vars, self.field)
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.vars, self.field)

    def minor(self, i: int, j: int) -> "PolyMatrix":
        """Submatrix with row ``i`` and column ``j`` removed."""
        return PolyMatrix(
            [[e for c, e in enumerate(r) if c != j] for r_i, r in enumerate(self.rows) if r_i != i],
            self.vars,
            self.field,
        )

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def determinant(self) -> MultiPoly:
        return determinant(self)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)

    def __repr__(self):
        return f"PolyMatrix({[[str(e) for e in r] for r in self.rows]}, vars={self.vars})"


def determinant(m: PolyMatrix) -> MultiPoly:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, k = m.shape
    if n != k:
        raise ValueError(f"determinant of non-square {n}x{k} matrix")
    a = [list(r) for r in m.rows]
    one = MultiPoly.constant(1, m.vars, m.field)
    if n == 1:
        return a[0][0]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            # prefer the sparsest nonzero pivot
            cands = [i for i in range(k + 1, n) if a[i][k]]
            if not cands:
                return MultiPoly.zero(m.vars, m.field)
            p = min(cands, key=lambda i: len(a[i][k]))
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * piv
                if aik and a[k][j]:
                    num = num - aik * a[k][j]
                a[i][j] = num if prev == one else num.exact_div(prev)
            a[i][k] = MultiPoly.zero(m.vars, m.field)
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d
