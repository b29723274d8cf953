"""Matrices over F_q[z].

Smith normal form tracks the row transform P, the column transform Q and
Q^{-1} in lockstep.  The Hermite row form is the canonical representative
of a row space and is what row-space equality tests compare.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .field import FiniteField
from .poly import Poly


class PolyMatrix:
    """Immutable dense matrix with :class:`Poly` entries over one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FiniteField, rows: Sequence[Sequence[Poly]], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")
            for e in r:
                if e.field != field:
                    raise ValueError("entry over a different field")

    @classmethod
    def zeros(cls, field: FiniteField, nrows: int, ncols: int) -> PolyMatrix:
        z = Poly.zero(field)
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> PolyMatrix:
        z, o = Poly.zero(field), Poly.one(field)
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_constants(cls, field: FiniteField, rows: Sequence[Sequence[int]]) -> PolyMatrix:
        return cls(field, [[Poly.constant(field, c) for c in r] for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.rows[i]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.rows)

    def submatrix(self, rows: Sequence[int] | range, cols: Sequence[int] | range) -> PolyMatrix:
        return PolyMatrix(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.field, [list(c) for c in zip(*self.rows)], self.nrows)

    def stack(self, other: PolyMatrix) -> PolyMatrix:
        if other.ncols != self.ncols:
            raise ValueError("column count mismatch")
        return PolyMatrix(self.field, list(self.rows) + list(other.rows), self.ncols)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def nonzero_rows(self) -> tuple[tuple[Poly, ...], ...]:
        return tuple(r for r in self.rows if any(not e.is_zero() for e in r))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = Poly.zero(self.field)
        cols = other.column
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = zero
                for a, b in zip(r, cols(j)):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out, other.ncols)

    def vecmul(self, v: Sequence[Poly]) -> list[Poly]:
        """Row vector times matrix."""
        if len(v) != self.nrows:
            raise ValueError("length mismatch")
        out = []
        for j in range(self.ncols):
            acc = Poly.zero(self.field)
            for a, r in zip(v, self.rows):
                if a and r[j]:
                    acc = acc + a * r[j]
            out.append(acc)
        return out

    def det(self) -> Poly:
        """Determinant by Laplace expansion memoized on column subsets."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _det(self.rows, self.field)

    def max_degree(self) -> int:
        return max((e.degree for r in self.rows for e in r), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        from .textio import format_polymatrix

        return format_polymatrix(self)


def _det(rows, F) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.one(F)
    memo: dict[tuple[int, ...], Poly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> Poly:
        # determinant of rows r.. and the given columns
        if r == n:
            return Poly.one(F)
        if cols in memo:
            return memo[cols]
        acc = Poly.zero(F)
        for idx, c in enumerate(cols):
            e = rows[r][c]
            if e.is_zero():
                continue
            term = e * minor(r + 1, cols[:idx] + cols[idx + 1:])
            acc = acc - term if idx % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


@dataclass(frozen=True)
class SmithDecomposition:
    """H = P M Q with H diagonal, d_1 | d_2 | ..., units normalized to 1."""

    H: PolyMatrix
    P: PolyMatrix
    Q: PolyMatrix
    Q_inv: PolyMatrix
    rank: int

    @property
    def invariant_factors(self) -> list[Poly]:
        return [self.H[i, i] for i in range(self.rank)]


def _pick_pivot(A, t: int, m: int, n: int):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            e = A[i][j]
            if e and (best is None or e.degree < best[0]):
                best = (e.degree, i, j)
    return None if best is None else best[1:]


def smith_normal_form(M: PolyMatrix) -> SmithDecomposition:
    F = M.field
    m, n = M.shape
    A = [list(r) for r in M.rows]
    P = [list(r) for r in PolyMatrix.identity(F, m).rows]
    Q = [list(r) for r in PolyMatrix.identity(F, n).rows]
    Qi = [list(r) for r in PolyMatrix.identity(F, n).rows]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for R in (A, Q):
            for row in R:
                row[i], row[j] = row[j], row[i]
        Qi[i], Qi[j] = Qi[j], Qi[i]

    def add_row(dst, src, c: Poly):
        # row_dst += c * row_src
        for R in (A, P):
            R[dst] = [x + c * y if y else x for x, y in zip(R[dst], R[src])]

    def add_col(dst, src, c: Poly):
        # col_dst += c * col_src; inverse op on Q^{-1}: row_src -= c * row_dst
        for R in (A, Q):
            for row in R:
                if row[src]:
                    row[dst] = row[dst] + c * row[src]
        Qi[src] = [x - c * y if y else x for x, y in zip(Qi[src], Qi[dst])]

    t = 0
    while t < min(m, n):
        piv = _pick_pivot(A, t, m, n)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            d = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // d))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // d))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                piv = _pick_pivot(A, t, m, n)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] and (A[i][j] % d)),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, Poly.one(F))
            piv = _pick_pivot(A, t, m, n)
        c = Poly.constant(F, F.inv(A[t][t].lc))
        A[t] = [x * c for x in A[t]]
        P[t] = [x * c for x in P[t]]
        t += 1

    dec = SmithDecomposition(
        H=PolyMatrix(F, A, n),
        P=PolyMatrix(F, P, m),
        Q=PolyMatrix(F, Q, n),
        Q_inv=PolyMatrix(F, Qi, n),
        rank=t,
    )
    if dec.P @ M @ dec.Q != dec.H:
        raise AssertionError("Smith decomposition identity P M Q = H failed")
    return dec


def is_basic(d: SmithDecomposition) -> bool:
    """True iff every nonzero invariant factor is 1."""
    return all(f.is_one() for f in d.invariant_factors)


def first_obstruction(d: SmithDecomposition) -> tuple[int, Poly] | None:
    """(1-based position, factor) of the first non-unit invariant factor."""
    for i, f in enumerate(d.invariant_factors):
        if not f.is_one():
            return i + 1, f
    return None


def hermite_row_form(M: PolyMatrix) -> PolyMatrix:
    """Row echelon form with monic pivots and reduced entries above pivots."""
    F = M.field
    A = [list(r) for r in M.rows]
    m, n = M.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        found = False
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            found = True
            piv = min(nz, key=lambda i: (A[i][c].degree, i))
            A[r], A[piv] = A[piv], A[r]
            d = A[r][c]
            left = False
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // d
                    A[i] = [x - q * y if y else x for x, y in zip(A[i], A[r])]
                    left = left or bool(A[i][c])
            if not left:
                break
        if not found:
            continue
        s = Poly.constant(F, F.inv(A[r][c].lc))
        A[r] = [x * s for x in A[r]]
        for i in range(r):
            if A[i][c]:
                q = A[i][c] // A[r][c]
                A[i] = [x - q * y if y else x for x, y in zip(A[i], A[r])]
        r += 1
    return PolyMatrix(F, A, n)


def same_row_space(A: PolyMatrix, B: PolyMatrix) -> bool:
    """Row spaces over F_q[z] agree: Hermite forms of A, B and [A; B] coincide."""
    ha = hermite_row_form(A).nonzero_rows()
    hb = hermite_row_form(B).nonzero_rows()
    hs = hermite_row_form(A.stack(B)).nonzero_rows()
    return ha == hb == hs


def max_minor_degree(M: PolyMatrix, k: int) -> float:
    """Largest degree of a k x k minor; -inf if all such minors vanish."""
    if not 0 <= k <= min(M.shape):
        raise ValueError(f"minor size {k} out of range for a {M.nrows}x{M.ncols} matrix")
    best: float = -math.inf
    for rows in itertools.combinations(range(M.nrows), k):
        for cols in itertools.combinations(range(M.ncols), k):
            d = M.submatrix(rows, cols).det()
            if d:
                best = max(best, d.degree)
    return best
