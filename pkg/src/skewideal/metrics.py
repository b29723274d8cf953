"""Convolutional code parameters of a basic encoder over F_q[z].

Weights count nonzero F_q symbols.  Distances are found by exhaustive
search over message coefficient tuples, vectorized with numpy: the last
message rows are tabulated once and the leading rows are looped over.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import linalg
from .field import FiniteField
from .poly import Poly
from .polymatrix import PolyMatrix, max_minor_degree

SEARCH_CAP = 1 << 26
_TABLE_ROWS = 1 << 16


class SearchTooLarge(ValueError):
    pass


def code_degree(encoder: PolyMatrix) -> int:
    """Largest degree of a full-size minor."""
    d = max_minor_degree(encoder, encoder.nrows)
    if d == -math.inf:
        raise ValueError("encoder does not have full row rank")
    return int(d)


def singleton_bound(n: int, k: int, degree: int) -> int:
    """(n - k)(floor(degree / k) + 1) + degree + 1."""
    return (n - k) * (degree // k + 1) + degree + 1


def row_reduced(encoder: PolyMatrix) -> PolyMatrix:
    """Equivalent encoder whose leading row coefficient matrix has full rank.

    Repeatedly cancels the top-degree part of a row of maximal degree
    against the other rows; the row space is unchanged.
    """
    F = encoder.field
    rows = [list(r) for r in encoder.rows]
    k = len(rows)
    while True:
        degs = [max(e.degree for e in r) for r in rows]
        lead = [[e[degs[i]] for e in r] for i, r in enumerate(rows)]
        # dependency sum_i c_i lead_i = 0
        null = linalg.nullspace(F, [list(col) for col in zip(*lead)])
        if not null:
            return PolyMatrix(F, rows, encoder.ncols)
        c = null[0]
        top = max((i for i in range(k) if c[i] != F.zero), key=lambda i: (degs[i], i))
        new = [Poly.zero(F) for _ in range(encoder.ncols)]
        for i in range(k):
            if c[i] == F.zero:
                continue
            mult = Poly.monomial(F, degs[top] - degs[i], c[i])
            new = [x + mult * y for x, y in zip(new, rows[i])]
        rows[top] = [x.scale(F.inv(c[top])) for x in new]


class _Tables:
    def __init__(self, F: FiniteField):
        q = F.order
        els = range(q)
        self.q = q
        self.char2 = F.p == 2
        self.add = np.array([[F.add(a, b) for b in els] for a in els], dtype=np.int32)
        self.mul = np.array([[F.mul(a, b) for b in els] for a in els], dtype=np.int32)

    def plus(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.bitwise_xor(x, y) if self.char2 else self.add[x, y]


def _span_table(T: _Tables, rows: np.ndarray) -> np.ndarray:
    """All F_q-combinations of the given rows, one per table row."""
    table = np.zeros((1, rows.shape[1]), dtype=np.int32)
    for r in rows:
        scaled = T.mul[:, r]  # q x N, scalar c times row r
        table = T.plus(table[:, None, :], scaled[None, :, :]).reshape(-1, rows.shape[1])
    return table


def _min_weight(F: FiniteField, rows: np.ndarray, nonzero_prefix: int, cap: int = SEARCH_CAP) -> int:
    """Min symbol weight of sum c_i rows_i with (c_0..c_{s-1}) != 0, s = nonzero_prefix."""
    T = _Tables(F)
    q = F.order
    m = rows.shape[0]
    if q ** m > cap:
        raise SearchTooLarge(f"{q}^{m} candidates exceed the search cap {cap}")
    inner = 0
    while inner < m - nonzero_prefix and q ** (inner + 1) <= _TABLE_ROWS:
        inner += 1
    outer = m - inner
    table = _span_table(T, rows[outer:]) if inner else np.zeros((1, rows.shape[1]), dtype=np.int32)
    best = None
    for coeffs in itertools.product(range(q), repeat=outer):
        if not any(coeffs[:nonzero_prefix]):
            continue
        v = np.zeros(rows.shape[1], dtype=np.int32)
        for c, r in zip(coeffs, rows[:outer]):
            if c:
                v = T.plus(v, T.mul[c, r])
        w = int(np.count_nonzero(T.plus(table, v[None, :]), axis=1).min())
        if best is None or w < best:
            best = w
    if best is None:
        raise ValueError("empty search space")
    return best


def _coefficient_blocks(encoder: PolyMatrix) -> list[np.ndarray]:
    """G_0, G_1, ..., G_m with encoder = sum z^i G_i, each k x n."""
    m = max(encoder.max_degree(), 0)
    return [np.array([[e[d] for e in r] for r in encoder.rows], dtype=np.int32) for d in range(m + 1)]


def _sliding_rows(encoder: PolyMatrix, j: int, width: int) -> np.ndarray:
    """Rows of the map (u_0..u_j) -> first ``width`` blocks of u(z) encoder."""
    k, n = encoder.shape
    blocks = _coefficient_blocks(encoder)
    out = np.zeros((k * (j + 1), n * width), dtype=np.int32)
    for s in range(j + 1):
        for d, Gd in enumerate(blocks):
            t = s + d
            if t < width:
                out[s * k:(s + 1) * k, t * n:(t + 1) * n] = Gd
    return out


def column_distance(encoder: PolyMatrix, j: int, cap: int = SEARCH_CAP) -> int:
    """min weight of the first j+1 blocks of u(z) encoder over u_0 != 0."""
    if j < 0:
        raise ValueError("j must be >= 0")
    rows = _sliding_rows(encoder, j, j + 1)
    return _min_weight(encoder.field, rows, encoder.nrows, cap)


def row_distance(encoder: PolyMatrix, j: int, cap: int = SEARCH_CAP) -> int:
    """min full weight of u(z) encoder over deg u <= j, u_0 != 0."""
    if j < 0:
        raise ValueError("j must be >= 0")
    m = max(encoder.max_degree(), 0)
    rows = _sliding_rows(encoder, j, j + m + 1)
    return _min_weight(encoder.field, rows, encoder.nrows, cap)


@dataclass
class CodeProfile:
    n: int
    k: int
    degree: int
    column_distances: list[int] = dc_field(default_factory=list)
    row_distances: list[int] = dc_field(default_factory=list)
    free_distance: int | None = None
    certificate: str = "exhausted"
    bracket: tuple[int, int | None] | None = None
    singleton_bound: int = 0


def free_distance(encoder: PolyMatrix, max_j: int, cap: int = SEARCH_CAP) -> CodeProfile:
    """Grow j until a column distance meets the Singleton bound (MDS) or a row distance (sandwich)."""
    if max_j < 0:
        raise ValueError("max_j must be >= 0")
    enc = row_reduced(encoder)
    k, n = enc.shape
    deg = code_degree(enc)
    prof = CodeProfile(n, k, deg, singleton_bound=singleton_bound(n, k, deg))
    for j in range(max_j + 1):
        dc = column_distance(enc, j, cap)
        if prof.column_distances and dc < prof.column_distances[-1]:  # pragma: no cover
            raise AssertionError("column distances decreased")
        prof.column_distances.append(dc)
        try:
            prof.row_distances.append(row_distance(enc, j, cap))
        except SearchTooLarge:
            pass
        if prof.row_distances and dc > min(prof.row_distances):  # pragma: no cover
            raise AssertionError("column distance exceeds a row distance")
        if k < n and dc == prof.singleton_bound:
            prof.free_distance, prof.certificate = dc, "MDS"
            return prof
        if prof.row_distances and dc == min(prof.row_distances):
            prof.free_distance, prof.certificate = dc, "sandwich"
            return prof
    upper = min(prof.row_distances) if prof.row_distances else None
    prof.bracket = (max(prof.column_distances), upper)
    return prof
