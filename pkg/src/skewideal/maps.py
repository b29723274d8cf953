"""F_q-linear endomorphisms of an algebra: automorphisms and sigma-derivations.

A :class:`LinearMap` is a plain n x n matrix (column i is the image of v_i);
the ``kind`` tag is only attached after the corresponding identities have
been checked on every pair of basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import linalg
from .algebra import Algebra, AlgebraElement, AlgebraError, embed_component, project_component


class MapValidationError(AlgebraError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class LinearMap:
    __slots__ = ("algebra", "columns", "kind", "sigma")

    def __init__(self, algebra: Algebra, columns: Sequence[Sequence[int]], kind: str = "plain",
                 sigma: LinearMap | None = None):
        if len(columns) != algebra.dim or any(len(c) != algebra.dim for c in columns):
            raise ValueError("a linear map needs n columns of length n")
        self.algebra = algebra
        self.columns = tuple(tuple(c) for c in columns)
        self.kind = kind
        self.sigma = sigma

    @classmethod
    def from_function(cls, A: Algebra, fn: Callable[[AlgebraElement], AlgebraElement], kind="plain", sigma=None):
        return cls(A, [fn(A.basis(i)).coords for i in range(A.dim)], kind, sigma)

    @classmethod
    def identity(cls, A: Algebra) -> LinearMap:
        return cls(A, [A.basis(i).coords for i in range(A.dim)], "automorphism")

    @classmethod
    def zero(cls, A: Algebra, sigma: LinearMap | None = None) -> LinearMap:
        kind = "derivation" if sigma is not None else "plain"
        return cls(A, [A.zero().coords] * A.dim, kind, sigma)

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        A = self.algebra
        F = A.field
        out = [F.zero] * A.dim
        for x, col in zip(a.coords, self.columns):
            if x == F.zero:
                continue
            for k, c in enumerate(col):
                if c != F.zero:
                    out[k] = F.add(out[k], F.mul(x, c))
        return A.element(out)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]

    def compose(self, other: LinearMap) -> LinearMap:
        """self o other, tagged as an automorphism when both factors are."""
        kind = "automorphism" if self.kind == other.kind == "automorphism" else "plain"
        return LinearMap(self.algebra, [self(self.algebra.element(c)).coords for c in other.columns], kind)

    def power(self, k: int) -> LinearMap:
        out = LinearMap.identity(self.algebra)
        if self.kind != "automorphism":
            out.kind = "plain"
        for _ in range(k):
            out = self.compose(out)
        return out

    def is_identity(self) -> bool:
        return self.columns == LinearMap.identity(self.algebra).columns

    def is_zero(self) -> bool:
        F = self.algebra.field
        return all(c == F.zero for col in self.columns for c in col)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra is other.algebra and self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    def __repr__(self) -> str:
        return f"LinearMap({self.kind}, dim={self.algebra.dim})"


def validate_automorphism(m: LinearMap) -> LinearMap:
    A = m.algebra
    if m(A.one()) != A.one():
        raise MapValidationError("map is not unital")
    images = [m(A.basis(i)) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if m(A.basis(i) * A.basis(j)) != images[i] * images[j]:
                raise MapValidationError(f"map is not multiplicative on basis pair ({i}, {j})", (i, j))
    if linalg.rank(A.field, m.matrix()) != A.dim:
        raise MapValidationError("map is not invertible")
    return LinearMap(A, m.columns, "automorphism")


def validate_derivation(d: LinearMap, sigma: LinearMap) -> LinearMap:
    A = d.algebra
    if sigma.algebra is not A:
        raise ValueError("sigma acts on a different algebra")
    if not d(A.one()).is_zero():
        raise MapValidationError("sigma-derivation does not kill 1")
    dimg = [d(A.basis(i)) for i in range(A.dim)]
    simg = [sigma(A.basis(i)) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = d(A.basis(i) * A.basis(j))
            rhs = dimg[i] * simg[j] + A.basis(i) * dimg[j]
            if lhs != rhs:
                raise MapValidationError(f"sigma-Leibniz rule fails on basis pair ({i}, {j})", (i, j))
    return LinearMap(A, d.columns, "derivation", sigma)


def _as_element(A: Algebra, x) -> AlgebraElement:
    return x if isinstance(x, AlgebraElement) else A.element(x)


def construct_map(A: Algebra, spec: dict, kind: str = "automorphism", sigma: LinearMap | None = None) -> LinearMap:
    """Assemble a map from a tagged spec and validate it as ``kind``.

    Spec types: ``matrix`` (columns), ``identity``, ``zero``, ``function``
    (callable on elements), ``inner`` (unit u, X -> u X u^{-1}),
    ``generator_image`` (image of x for quotient algebras),
    ``group_automorphism`` (permutation of group basis), ``block_shift``
    ((b_1..b_m) -> (t(b_m), t(b_1), ..., t(b_{m-1})) for a block map t),
    ``inner_derivation`` (element u, X -> X u - u sigma(X); needs sigma).
    """
    t = spec.get("type")
    if t == "matrix":
        m = LinearMap(A, spec["columns"])
    elif t == "identity":
        m = LinearMap.identity(A)
    elif t == "zero":
        m = LinearMap.zero(A)
    elif t == "function":
        m = LinearMap.from_function(A, spec["fn"])
    elif t == "inner":
        u = _as_element(A, spec["unit"])
        uinv = A.inverse(u)
        m = LinearMap.from_function(A, lambda x: u * x * uinv)
    elif t == "inner_derivation":
        if sigma is None:
            raise ValueError("an inner sigma-derivation needs its automorphism")
        u = _as_element(A, spec["element"])
        m = LinearMap.from_function(A, lambda x: x * u - u * sigma(x))
    elif t == "generator_image":
        if A.kind != "quotient":
            raise AlgebraError("generator_image maps need a quotient algebra")
        h = _as_element(A, spec["image"])
        f = A.info["modulus"]
        acc = A.zero()
        for c in reversed(f.coeffs):
            acc = acc * h + A.scalar(c)
        if not acc.is_zero():
            raise MapValidationError("image of x is not a root of the modulus; map is not well defined")
        cols, cur = [], A.one()
        for _ in range(A.dim):
            cols.append(cur.coords)
            cur = cur * h
        m = LinearMap(A, cols)
    elif t == "group_automorphism":
        if A.kind != "group":
            raise AlgebraError("group_automorphism maps need a group algebra")
        perm = spec["perm"]
        m = LinearMap(A, [A.basis(perm[i]).coords for i in range(A.dim)])
    elif t == "block_shift":
        if A.kind != "direct_sum":
            raise AlgebraError("block_shift maps need a direct sum")
        comps = A.info["components"]
        tau = spec["block"]
        if not isinstance(tau, LinearMap):
            tau = construct_map(comps[0], tau, "automorphism")
        mcount = len(comps)
        if any(c is not tau.algebra and c.structure_constants() != tau.algebra.structure_constants() for c in comps):
            raise AlgebraError("block_shift needs identical components")

        def shift(x: AlgebraElement) -> AlgebraElement:
            out = A.zero()
            for b in range(mcount):
                part = comps[0].element(project_component(A, b, x).coords)
                out = out + embed_component(A, (b + 1) % mcount, comps[(b + 1) % mcount].element(tau(part).coords))
            return out

        m = LinearMap.from_function(A, shift)
    else:
        raise AlgebraError(f"unknown map type {t!r}")

    if kind == "automorphism":
        return validate_automorphism(m)
    if kind == "derivation":
        if sigma is None:
            raise ValueError("a sigma-derivation needs its automorphism")
        return validate_derivation(m, sigma)
    return m


def map_order(sigma: LinearMap, bound: int | None = None) -> int:
    """Least m >= 1 with sigma^m = id."""
    if sigma.kind != "automorphism":
        raise ValueError("order is defined for automorphisms")
    A = sigma.algebra
    if bound is None:
        bound = A.field.order ** A.dim
    cur = sigma
    for m in range(1, bound + 1):
        if cur.is_identity():
            return m
        cur = sigma.compose(cur)
    raise RuntimeError("order bound exceeded")  # pragma: no cover


@dataclass(frozen=True)
class BlockAction:
    """Permutation induced on block indices, with cyclically ordered orbits."""

    perm: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]


def block_action(sigma: LinearMap, blocks) -> BlockAction:
    if sigma.kind != "automorphism":
        raise ValueError("block action needs an automorphism")
    idem = list(blocks.idempotents)
    perm = []
    for i, e in enumerate(idem):
        img = sigma(e)
        try:
            perm.append(idem.index(img))
        except ValueError:
            raise AlgebraError(f"sigma(e_{i}) is not one of the block idempotents") from None
    if sorted(perm) != list(range(len(idem))):
        raise AlgebraError("induced block map is not a permutation")
    seen: set[int] = set()
    orbits = []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        orbits.append(tuple(cyc))
    return BlockAction(tuple(perm), tuple(orbits))
