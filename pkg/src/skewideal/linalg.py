"""Dense linear algebra over a finite field.

Every routine takes the field as its first argument and works on the
field's native element values (ints for :class:`FiniteField`, coordinate
tuples for :class:`QuotientField`).  Matrices are lists of rows.
"""

from __future__ import annotations

from typing import Any, Sequence

Matrix = list[list[Any]]


def zeros(F, rows: int, cols: int) -> Matrix:
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n: int) -> Matrix:
    out = zeros(F, n, n)
    for i in range(n):
        out[i][i] = F.one
    return out


def matmul(F, A: Sequence[Sequence[Any]], B: Sequence[Sequence[Any]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = zeros(F, len(A), cols)
    for i, row in enumerate(A):
        acc = out[i]
        for t in range(inner):
            a = row[t]
            if a == F.zero:
                continue
            brow = B[t]
            for j in range(cols):
                b = brow[j]
                if b != F.zero:
                    acc[j] = F.add(acc[j], F.mul(a, b))
    return out


def matvec(F, A: Sequence[Sequence[Any]], v: Sequence[Any]) -> list:
    out = []
    for row in A:
        acc = F.zero
        for a, b in zip(row, v):
            if a != F.zero and b != F.zero:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def rref(F, A: Sequence[Sequence[Any]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    M = [list(r) for r in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if M[i][c] != F.zero), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = F.inv(M[r][c])
        M[r] = [F.mul(s, x) for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != F.zero:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(F, A: Sequence[Sequence[Any]]) -> int:
    return len(rref(F, A)[1])


def inverse(F, A: Sequence[Sequence[Any]]) -> Matrix:
    """Inverse of a square matrix; raises ``ValueError`` if singular."""
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(F, n))]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def solve(F, A: Sequence[Sequence[Any]], b: Sequence[Any]) -> list | None:
    """One solution x of A x = b, or None if the system is inconsistent."""
    cols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    if cols in pivots:
        return None
    x = [F.zero] * cols
    for i, c in enumerate(pivots):
        x[c] = R[i][cols]
    return x


def nullspace(F, A: Sequence[Sequence[Any]]) -> Matrix:
    """Basis (as rows) of the right kernel {x : A x = 0}."""
    cols = len(A[0]) if A else 0
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * cols
        x[f] = F.one
        for i, c in enumerate(pivots):
            x[c] = F.neg(R[i][f])
        basis.append(x)
    return basis
