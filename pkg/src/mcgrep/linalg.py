"""Exact sparse linear operators over Q(zeta) or a Laurent ring.

Columns are dictionaries ``row -> scalar``. Every operation is exact; nothing
is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from .scalars import CycScalar, LaurentScalar

Column = dict[int, object]


def _is_zero(x: object) -> bool:
    if isinstance(x, int):
        return x == 0
    return x.is_zero()  # type: ignore[union-attr]


def add_into(target: dict, key, value) -> None:
    """target[key] += value, deleting the key when the sum vanishes."""
    if key in target:
        s = target[key] + value
        if _is_zero(s):
            del target[key]
        else:
            target[key] = s
    elif not _is_zero(value):
        target[key] = value


@dataclass(frozen=True)
class Mismatch:
    """A coordinate where two operators disagree (after any scaling)."""

    row: int
    col: int
    left: object
    right: object


@dataclass(frozen=True)
class Proportional:
    """A witness scalar c with left = c * right."""

    scalar: object


class SparseOperator:
    """A square exact matrix stored column by column."""

    __slots__ = ("dim", "cols", "one", "zero")

    def __init__(self, dim: int, cols: Mapping[int, Mapping[int, object]], one: object) -> None:
        self.dim = dim
        self.one = one
        self.zero = one - one  # type: ignore[operator]
        clean: dict[int, Column] = {}
        for j, col in cols.items():
            c = {i: v for i, v in col.items() if not _is_zero(v)}
            if c:
                clean[j] = c
        self.cols = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(dim: int, one: object) -> SparseOperator:
        return SparseOperator(dim, {i: {i: one} for i in range(dim)}, one)

    @staticmethod
    def from_columns(dim: int, fn: Callable[[int], Mapping[int, object]], one: object) -> SparseOperator:
        return SparseOperator(dim, {j: fn(j) for j in range(dim)}, one)

    @staticmethod
    def kron(a: SparseOperator, b: SparseOperator) -> SparseOperator:
        """Kronecker product; index (i, k) maps to i * b.dim + k."""
        cols: dict[int, Column] = {}
        for ja, ca in a.cols.items():
            for jb, cb in b.cols.items():
                col: Column = {}
                for ia, va in ca.items():
                    base = ia * b.dim
                    for ib, vb in cb.items():
                        col[base + ib] = va * vb
                cols[ja * b.dim + jb] = col
        return SparseOperator(a.dim * b.dim, cols, a.one)

    # -- access -----------------------------------------------------------

    def entry(self, i: int, j: int) -> object:
        return self.cols.get(j, {}).get(i, self.zero)

    def column(self, j: int) -> Column:
        return self.cols.get(j, {})

    def entries(self) -> Iterator[tuple[int, int, object]]:
        """All nonzero entries sorted by (col, row)."""
        for j in sorted(self.cols):
            col = self.cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    # -- arithmetic -------------------------------------------------------

    def apply(self, vec: Mapping[int, object]) -> Column:
        out: Column = {}
        for j, x in vec.items():
            for i, v in self.cols.get(j, {}).items():
                add_into(out, i, v * x)
        return out

    def __matmul__(self, other: SparseOperator) -> SparseOperator:
        """Composition self o other."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return SparseOperator(self.dim, {j: self.apply(c) for j, c in other.cols.items()}, self.one)

    def __add__(self, other: SparseOperator) -> SparseOperator:
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            tgt = cols.setdefault(j, {})
            for i, v in c.items():
                add_into(tgt, i, v)
        return SparseOperator(self.dim, cols, self.one)

    def scale(self, s: object) -> SparseOperator:
        return SparseOperator(self.dim, {j: {i: s * v for i, v in c.items()} for j, c in self.cols.items()}, self.one)

    def __neg__(self) -> SparseOperator:
        return self.scale(-self.one)  # type: ignore[operator]

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return self + (-other)

    def __pow__(self, e: int) -> SparseOperator:
        if e < 0:
            return self.inverse() ** (-e)
        result = SparseOperator.identity(self.dim, self.one)
        base = self
        while e:
            if e & 1:
                result = base @ result
            e >>= 1
            if e:
                base = base @ base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def __hash__(self) -> int:  # pragma: no cover - operators are not dict keys
        raise TypeError("SparseOperator is unhashable")

    def is_zero(self) -> bool:
        return not self.cols

    def first_difference(self, other: SparseOperator) -> Mismatch | None:
        for j in sorted(set(self.cols) | set(other.cols)):
            a, b = self.cols.get(j, {}), other.cols.get(j, {})
            for i in sorted(set(a) | set(b)):
                x, y = a.get(i, self.zero), b.get(i, self.zero)
                if x != y:
                    return Mismatch(i, j, x, y)
        return None

    def compare_projective(self, other: SparseOperator) -> Proportional | Mismatch:
        """Find c with self == c * other, or report a coordinate where no c works."""
        if other.is_zero():
            if self.is_zero():
                return Proportional(self.one)
            i, j, v = next(self.entries())
            return Mismatch(i, j, v, self.zero)
        i0, j0, b0 = next(other.entries())
        a0 = self.entry(i0, j0)
        if _is_zero(a0):
            return Mismatch(i0, j0, a0, b0)
        c = a0 / b0  # type: ignore[operator]
        diff = self.first_difference(other.scale(c))
        if diff is None:
            return Proportional(c)
        return diff

    def commutes_with(self, other: SparseOperator) -> bool:
        return (self @ other) == (other @ self)

    # -- elimination ------------------------------------------------------

    def _rows(self) -> dict[int, dict[int, object]]:
        rows: dict[int, dict[int, object]] = {}
        for j, c in self.cols.items():
            for i, v in c.items():
                rows.setdefault(i, {})[j] = v
        return rows

    def components(self) -> list[list[int]]:
        """Connected components of the row/column incidence graph."""
        parent = list(range(self.dim))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for j, c in self.cols.items():
            rj = find(j)
            for i in c:
                ri = find(i)
                if ri != rj:
                    parent[ri] = rj
                    rj = find(j)
        groups: dict[int, list[int]] = {}
        for x in range(self.dim):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def inverse(self) -> SparseOperator:
        """Exact inverse by Gauss-Jordan elimination on each connected block."""
        cols: dict[int, Column] = {}
        for comp in self.components():
            block_inv = _invert_block(self, comp)
            for j, col in block_inv.items():
                cols[j] = col
        return SparseOperator(self.dim, cols, self.one)

    def rank(self) -> int:
        return rank_of_rows(self._rows())


def _invert_block(op: SparseOperator, idx: list[int]) -> dict[int, Column]:
    """Invert the principal block on the index set idx (a union of components)."""
    pos = {x: k for k, x in enumerate(idx)}
    n = len(idx)
    # augmented rows: A | I, stored as dicts keyed by column, augmented columns offset by n
    rows: list[dict[int, object]] = [dict() for _ in range(n)]
    for j in idx:
        for i, v in op.cols.get(j, {}).items():
            rows[pos[i]][pos[j]] = v
    for k in range(n):
        rows[k][n + k] = op.one
    pivot_row_of: dict[int, int] = {}
    used = [False] * n
    for col in range(n):
        best = None
        for k in range(n):
            if not used[k] and col in rows[k]:
                if best is None or len(rows[k]) < len(rows[best]):
                    best = k
        if best is None:
            raise ArithmeticError("singular operator")
        used[best] = True
        pivot_row_of[col] = best
        prow = rows[best]
        inv = op.one / prow[col]  # type: ignore[operator]
        if not (inv == op.one):
            prow = {c: v * inv for c, v in prow.items()}
            rows[best] = prow
        for k in range(n):
            if k != best and col in rows[k]:
                f = rows[k][col]
                rk = rows[k]
                for c, v in prow.items():
                    add_into(rk, c, -(f * v))
    out: dict[int, Column] = {}
    # row pivot_row_of[c] now reads e_c | (A^{-1})_{c, .}
    for c in range(n):
        row = rows[pivot_row_of[c]]
        for k, v in row.items():
            if k >= n:
                j = idx[k - n]
                out.setdefault(j, {})[idx[c]] = v
    return out


def rank_of_rows(rows: Mapping[int, Mapping[int, object]]) -> int:
    """Rank by sparse elimination, pivoting on short rows first."""
    work = [dict(r) for r in rows.values() if r]
    rank = 0
    while work:
        work.sort(key=len)
        prow = work.pop(0)
        if not prow:
            continue
        col = min(prow, key=lambda c: c)
        pv = prow[col]
        inv = 1 / pv if not isinstance(pv, int) else None
        rank += 1
        nxt = []
        for r in work:
            if col in r:
                f = r[col] * inv if inv is not None else None
                if f is None:
                    raise TypeError("integer matrices are not supported here")
                for c, v in prow.items():
                    add_into(r, c, -(f * v))
            if r:
                nxt.append(r)
        work = nxt
    return rank
