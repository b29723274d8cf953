"""Finite-dimensional associative algebras over F_q given by structure constants.

Constructors cover the quotients F_q[x]/(f), matrix algebras M_m(K) over an
extension K = F_q[x]/(g) (flattened to F_q coordinates), group algebras
from a Cayley table, direct sums, and raw structure-constant tables.
Associativity and the unit law are verified exhaustively at construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from . import linalg
from .field import FieldElement, FiniteField
from .poly import Poly, QuotientField, berlekamp_factor, quotient_idempotents

MAX_DIMENSION = 64


class AlgebraError(ValueError):
    pass


class Algebra:
    """An F_q-algebra with basis v_0, ..., v_{n-1} and v_i v_j = sum_k c_ijk v_k."""

    def __init__(
        self,
        field: FiniteField,
        constants: Sequence[Sequence[Sequence[int]]],
        unit: Sequence[int] | None = None,
        labels: Sequence[str] | None = None,
        kind: str = "raw",
        **info: Any,
    ):
        n = len(constants)
        if n == 0 or n > MAX_DIMENSION:
            raise AlgebraError(f"dimension {n} outside 1..{MAX_DIMENSION}")
        self.field = field
        self.dim = n
        self.kind = kind
        self.info = info
        self.labels = tuple(labels) if labels is not None else tuple(f"v{i}" for i in range(n))
        table = []
        for i in range(n):
            if len(constants[i]) != n:
                raise AlgebraError("structure constants must be n x n x n")
            row = []
            for j in range(n):
                vec = constants[i][j]
                if len(vec) != n:
                    raise AlgebraError("structure constants must be n x n x n")
                row.append(tuple((k, c) for k, c in enumerate(vec) if c != field.zero))
            table.append(row)
        self._table = table
        if unit is None:
            unit = self._solve_unit()
        self._unit = tuple(unit)
        self._verify()

    # -- validation --

    def _solve_unit(self) -> tuple[int, ...]:
        F, n = self.field, self.dim
        rows, rhs = [], []
        for j in range(n):
            for k in range(n):
                rows.append([dict(self._table[i][j]).get(k, F.zero) for i in range(n)])
                rhs.append(F.one if j == k else F.zero)
                rows.append([dict(self._table[j][i]).get(k, F.zero) for i in range(n)])
                rhs.append(F.one if j == k else F.zero)
        u = linalg.solve(F, rows, rhs)
        if u is None:
            raise AlgebraError("structure constants admit no two-sided unit")
        return tuple(u)

    def _verify(self) -> None:
        n = self.dim
        basis = [self.basis(i) for i in range(n)]
        one = self.one()
        for i, b in enumerate(basis):
            if one * b != b or b * one != b:
                raise AlgebraError(f"unit law fails at basis element {i}")
        prods = [[basis[i] * basis[j] for j in range(n)] for i in range(n)]
        for i, j, k in itertools.product(range(n), repeat=3):
            if prods[i][j] * basis[k] != basis[i] * prods[j][k]:
                raise AlgebraError(f"associativity fails at basis triple ({i}, {j}, {k})")

    # -- elements --

    def element(self, coords: Sequence[int]) -> AlgebraElement:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, tuple(coords))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, self._unit)

    def basis(self, i: int) -> AlgebraElement:
        c = [self.field.zero] * self.dim
        c[i] = self.field.one
        return AlgebraElement(self, tuple(c))

    def scalar(self, c: int) -> AlgebraElement:
        return self.one() * c

    def mul_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        out = [F.zero] * self.dim
        for i, x in enumerate(a):
            if x == F.zero:
                continue
            trow = self._table[i]
            for j, y in enumerate(b):
                if y == F.zero:
                    continue
                s = F.mul(x, y)
                for k, c in trow[j]:
                    out[k] = F.add(out[k], F.mul(s, c))
        return tuple(out)

    def left_matrix(self, a: AlgebraElement) -> list[list[int]]:
        """Matrix of x -> a x (column j is a v_j)."""
        cols = [(a * self.basis(j)).coords for j in range(self.dim)]
        return [list(r) for r in zip(*cols)]

    def inverse(self, a: AlgebraElement) -> AlgebraElement:
        y = linalg.solve(self.field, self.left_matrix(a), self._unit)
        if y is None:
            raise AlgebraError(f"{a} is not invertible")
        inv = self.element(y)
        if inv * a != self.one():
            raise AlgebraError(f"{a} has a right inverse that is not a left inverse")
        return inv

    def structure_constants(self) -> list[list[list[int]]]:
        F, n = self.field, self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                vec = [F.zero] * n
                for k, c in self._table[i][j]:
                    vec[k] = c
                row.append(vec)
            out.append(row)
        return out

    def is_commutative(self) -> bool:
        return all(
            self._table[i][j] == self._table[j][i] for i in range(self.dim) for j in range(i)
        )

    def is_central(self, a: AlgebraElement) -> bool:
        return all(a * self.basis(k) == self.basis(k) * a for k in range(self.dim))

    def __repr__(self) -> str:
        return f"Algebra({self.kind}, dim={self.dim} over {self.field!r})"


class AlgebraElement:
    """Coordinate vector of an element with respect to the algebra basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def _same(self, other: AlgebraElement) -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> AlgebraElement:
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.neg(a) for a in self.coords))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            self._same(other)
            return AlgebraElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        F = self.algebra.field
        if isinstance(other, FieldElement):
            c = other.value
        elif isinstance(other, int):
            c = other
        else:
            return NotImplemented
        return AlgebraElement(self.algebra, tuple(F.mul(c, a) for a in self.coords))

    def __rmul__(self, other) -> AlgebraElement:
        if isinstance(other, (FieldElement, int)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> AlgebraElement:
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(c == self.algebra.field.zero for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        from .textio import format_algebra_element

        return format_algebra_element(self)


# -- constructors --


def quotient_algebra(F: FiniteField, modulus: Poly) -> Algebra:
    """F[x]/(f) with basis 1, x, ..., x^{deg f - 1}."""
    f = modulus.monic().with_var("x")
    n = f.degree
    if n < 1:
        raise AlgebraError("quotient modulus must have degree >= 1")
    consts = []
    for i in range(n):
        row = []
        for j in range(n):
            r = Poly.monomial(F, i + j, var="x") % f
            row.append([r[k] for k in range(n)])
        consts.append(row)
    unit = [F.one] + [F.zero] * (n - 1)
    labels = ["1", "x"] + [f"x^{i}" for i in range(2, n)]
    return Algebra(F, consts, unit, labels[:n], kind="quotient", modulus=f)


def matrix_algebra(F: FiniteField, size: int, extension: Poly | None = None) -> Algebra:
    """M_size(K) over F_q with K = F_q[x]/(extension) (K = F_q when None).

    Basis E_ij w_l in row-major (i, j) order, l innermost, with w_l = x^l.
    """
    K = QuotientField(F, extension) if extension is not None else None
    d = K.d if K is not None else 1
    n = size * size * d

    def idx(i, j, l):
        return (i * size + j) * d + l

    if K is not None:
        wprod = [[K.mul(_xpow(K, a), _xpow(K, b)) for b in range(d)] for a in range(d)]
    consts = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, a, k, l, b in itertools.product(range(size), range(size), range(d), range(size), range(size), range(d)):
        if j != k:
            continue
        target = consts[idx(i, j, a)][idx(k, l, b)]
        if K is None:
            target[idx(i, l, 0)] = F.one
        else:
            for c, val in enumerate(wprod[a][b]):
                target[idx(i, l, c)] = val
    unit = [F.zero] * n
    for i in range(size):
        unit[idx(i, i, 0)] = F.one
    if d == 1:
        labels = [f"E{i + 1}{j + 1}" for i in range(size) for j in range(size)]
    else:
        labels = [f"E{i + 1}{j + 1}w{l}" for i in range(size) for j in range(size) for l in range(d)]
    return Algebra(F, consts, unit, labels, kind="matrix", size=size, scalar_field=K)


def _xpow(K: QuotientField, a: int):
    return K.from_poly(Poly.monomial(K.base, a, var="x"))


def group_algebra(F: FiniteField, table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> Algebra:
    """F_q G with basis the group elements in table order (table[i][j] = index of g_i g_j)."""
    n = len(table)
    if any(len(r) != n for r in table) or any(not 0 <= x < n for r in table for x in r):
        raise AlgebraError("Cayley table must be n x n with entries in range(n)")
    ident = next((e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))), None)
    if ident is None:
        raise AlgebraError("Cayley table has no identity")
    inverses = []
    for g in range(n):
        h = next((h for h in range(n) if table[g][h] == ident == table[h][g]), None)
        if h is None:
            raise AlgebraError(f"group element {g} has no inverse")
        inverses.append(h)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise AlgebraError(f"Cayley table not associative at ({a}, {b}, {c})")
    consts = [[[F.one if k == table[i][j] else F.zero for k in range(n)] for j in range(n)] for i in range(n)]
    unit = [F.one if k == ident else F.zero for k in range(n)]
    labels = list(names) if names is not None else [f"g{i}" for i in range(n)]
    return Algebra(
        F, consts, unit, labels, kind="group",
        table=tuple(tuple(r) for r in table), identity=ident, inverses=tuple(inverses),
    )


def cyclic_group_table(order: int) -> list[list[int]]:
    return [[(i + j) % order for j in range(order)] for i in range(order)]


def symmetric_group_table(m: int) -> list[list[int]]:
    """Cayley table of S_m with permutations listed lexicographically; (gh)(x) = g(h(x))."""
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(g[h[x]] for x in range(m))] for h in perms] for g in perms]


def direct_sum(components: Sequence[Algebra]) -> Algebra:
    if not components:
        raise AlgebraError("direct sum of no algebras")
    F = components[0].field
    if any(c.field != F for c in components):
        raise AlgebraError("direct sum components over different fields")
    offsets = list(itertools.accumulate([0] + [c.dim for c in components]))
    n = offsets[-1]
    consts = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    unit = [F.zero] * n
    labels = []
    for b, (comp, off) in enumerate(zip(components, offsets)):
        cc = comp.structure_constants()
        for i in range(comp.dim):
            for j in range(comp.dim):
                for k in range(comp.dim):
                    consts[off + i][off + j][off + k] = cc[i][j][k]
        for i, u in enumerate(comp.one().coords):
            unit[off + i] = u
        labels.extend(f"{lab}@{b}" for lab in comp.labels)
    return Algebra(F, consts, unit, labels, kind="direct_sum", components=tuple(components), offsets=tuple(offsets))


def embed_component(A: Algebra, block: int, a: AlgebraElement) -> AlgebraElement:
    """Image of a component element under the inclusion into a direct sum."""
    off = A.info["offsets"][block]
    coords = [A.field.zero] * A.dim
    coords[off:off + a.algebra.dim] = a.coords
    return A.element(coords)


def project_component(A: Algebra, block: int, a: AlgebraElement) -> AlgebraElement:
    comp = A.info["components"][block]
    off = A.info["offsets"][block]
    return comp.element(a.coords[off:off + comp.dim])


def construct_algebra(F: FiniteField, spec: dict) -> Algebra:
    """Build an algebra from a tagged spec dict (see the ``type`` key)."""
    kind = spec.get("type")
    if kind == "quotient":
        mod = spec["modulus"]
        if not isinstance(mod, Poly):
            mod = Poly(F, mod, "x")
        return quotient_algebra(F, mod)
    if kind == "matrix":
        ext = spec.get("extension")
        if ext is not None and not isinstance(ext, Poly):
            ext = Poly(F, ext, "x")
        return matrix_algebra(F, int(spec["size"]), ext)
    if kind == "group":
        return group_algebra(F, spec["table"], spec.get("names"))
    if kind == "cyclic":
        return group_algebra(F, cyclic_group_table(int(spec["order"])))
    if kind == "symmetric":
        return group_algebra(F, symmetric_group_table(int(spec["degree"])))
    if kind == "direct_sum":
        return direct_sum([construct_algebra(F, s) for s in spec["components"]])
    if kind == "raw":
        return Algebra(F, spec["constants"], spec.get("unit"), spec.get("labels"))
    raise AlgebraError(f"unknown algebra type {kind!r}")


# -- central block decomposition --


@dataclass(frozen=True)
class BlockDecomposition:
    """Complete set of orthogonal central idempotents e_1, ..., e_m of A."""

    algebra: Algebra
    idempotents: tuple[AlgebraElement, ...]
    dims: tuple[int, ...]
    fields: tuple[QuotientField | None, ...] = dc_field(default=())
    factors: tuple[Poly, ...] = dc_field(default=())

    def __len__(self) -> int:
        return len(self.idempotents)

    def embed(self, block: int, value) -> AlgebraElement:
        """Element of A e_i corresponding to a value of the block field K_i (quotient case)."""
        A = self.algebra
        K = self.fields[block]
        e = self.idempotents[block]
        r = K.to_poly(value) % A.info["modulus"]
        return A.element([r[i] for i in range(A.dim)]) * e


def validate_idempotents(A: Algebra, idem: Sequence[AlgebraElement]) -> None:
    total = A.zero()
    for i, e in enumerate(idem):
        if e * e != e:
            raise AlgebraError(f"block idempotent {i} is not idempotent")
        if not A.is_central(e):
            raise AlgebraError(f"block idempotent {i} is not central")
        for j in range(i):
            if not (e * idem[j]).is_zero():
                raise AlgebraError(f"block idempotents {j} and {i} are not orthogonal")
        total = total + e
    if total != A.one():
        raise AlgebraError("block idempotents do not sum to 1")


def block_decomposition(A: Algebra, idempotents: Sequence[AlgebraElement] | None = None) -> BlockDecomposition:
    F = A.field
    fields: tuple = ()
    factors: tuple = ()
    if idempotents is not None:
        idem = list(idempotents)
    elif A.kind == "quotient":
        f = A.info["modulus"]
        polys = quotient_idempotents(f)
        factors = tuple(g for g, _ in berlekamp_factor(f))
        idem = [A.element([e[i] for i in range(A.dim)]) for e in polys]
        fields = tuple(QuotientField(F, g) for g in factors)
    elif A.kind == "direct_sum":
        idem = [embed_component(A, b, c.one()) for b, c in enumerate(A.info["components"])]
    elif A.kind == "matrix":
        idem = [A.one()]
    else:
        raise AlgebraError(f"no block decomposition available for a {A.kind} algebra; supply idempotents")
    validate_idempotents(A, idem)
    dims = tuple(linalg.rank(F, A.left_matrix(e)) for e in idem)
    return BlockDecomposition(A, tuple(idem), dims, fields, factors)
