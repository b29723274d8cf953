"""The Ore extension R = A[z; sigma, delta] with right coefficients.

Elements are written sum_i z^i a_i and multiplied with the commutation
rule a z = z sigma(a) + delta(a).  ``vectorize`` and ``devectorize`` are
the F_q[z]-module isomorphisms between R and F_q[z]^n given by the basis
of A.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import Algebra, AlgebraElement
from .maps import LinearMap, construct_map
from .poly import Poly


class OreRing:
    def __init__(self, algebra: Algebra, sigma: LinearMap | None = None, delta: LinearMap | None = None):
        if sigma is None:
            sigma = LinearMap.identity(algebra)
        if sigma.algebra is not algebra or sigma.kind != "automorphism":
            raise ValueError("sigma must be a validated automorphism of the coefficient algebra")
        if delta is None:
            delta = LinearMap.zero(algebra, sigma)
        if delta.algebra is not algebra or delta.kind != "derivation":
            raise ValueError("delta must be a validated sigma-derivation")
        if delta.sigma is not None and delta.sigma != sigma:
            raise ValueError("delta was validated against a different automorphism")
        self.algebra = algebra
        self.sigma = sigma
        self.delta = delta

    @property
    def field(self):
        return self.algebra.field

    @property
    def has_derivation(self) -> bool:
        return not self.delta.is_zero()

    def __call__(self, coeffs) -> OrePolynomial:
        return OrePolynomial(self, coeffs)

    def zero(self) -> OrePolynomial:
        return OrePolynomial(self, [])

    def one(self) -> OrePolynomial:
        return OrePolynomial(self, [self.algebra.one()])

    def z(self) -> OrePolynomial:
        A = self.algebra
        return OrePolynomial(self, [A.zero(), A.one()])

    def constant(self, a: AlgebraElement) -> OrePolynomial:
        return OrePolynomial(self, [a])

    def parse(self, text: str) -> OrePolynomial:
        from .textio import parse_ore

        return parse_ore(self, text)

    def __repr__(self) -> str:
        return f"OreRing({self.algebra!r})"


class OrePolynomial:
    """sum_i z^i coeffs[i], immutable, no trailing zero coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: OreRing, coeffs: Sequence[AlgebraElement]):
        c = list(coeffs)
        for a in c:
            if a.algebra is not ring.algebra:
                raise ValueError("coefficient from a different algebra")
        while c and c[-1].is_zero():
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> AlgebraElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.algebra.zero()

    def _same(self, other: OrePolynomial) -> None:
        if other.ring is not self.ring:
            raise ValueError("Ore polynomials from different rings")

    def __add__(self, other: OrePolynomial) -> OrePolynomial:
        self._same(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return OrePolynomial(self.ring, [self.coeff(i) + other.coeff(i) for i in range(m)])

    def __neg__(self) -> OrePolynomial:
        return OrePolynomial(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: OrePolynomial) -> OrePolynomial:
        return self + (-other)

    def __mul__(self, other) -> OrePolynomial:
        if isinstance(other, OrePolynomial):
            return ore_multiply(self, other)
        if isinstance(other, AlgebraElement):
            return OrePolynomial(self.ring, [c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other) -> OrePolynomial:
        if isinstance(other, AlgebraElement):
            return ore_multiply(self.ring.constant(other), self)
        return NotImplemented

    def shift(self, k: int = 1) -> OrePolynomial:
        """z^k times self (z commutes with nothing but sits on the left here)."""
        A = self.ring.algebra
        if self.is_zero():
            return self
        return OrePolynomial(self.ring, [A.zero()] * k + list(self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrePolynomial):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(c.coords for c in self.coeffs))

    def __repr__(self) -> str:
        from .textio import format_ore

        return format_ore(self)


def _times_z(h: list[AlgebraElement], sigma: LinearMap, delta: LinearMap, with_delta: bool) -> list[AlgebraElement]:
    # (sum z^k c_k) z = sum z^{k+1} sigma(c_k) + z^k delta(c_k)
    A = sigma.algebra
    out = [A.zero()] * (len(h) + 1)
    for k, c in enumerate(h):
        if c.is_zero():
            continue
        out[k + 1] = out[k + 1] + sigma(c)
        if with_delta:
            out[k] = out[k] + delta(c)
    return out


def ore_multiply(f: OrePolynomial, g: OrePolynomial) -> OrePolynomial:
    """Product f g in A[z; sigma, delta]."""
    f._same(g)
    R = f.ring
    A = R.algebra
    if f.is_zero() or g.is_zero():
        return R.zero()
    with_delta = R.has_derivation
    out = [A.zero()] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        # h runs through a z^j as an Ore polynomial, j = 0, 1, ...
        h = [a]
        for j, b in enumerate(g.coeffs):
            if j:
                h = _times_z(h, R.sigma, R.delta, with_delta)
            if b.is_zero():
                continue
            for k, c in enumerate(h):
                if not c.is_zero():
                    out[i + k] = out[i + k] + c * b
    return OrePolynomial(R, out)


def vectorize(f: OrePolynomial) -> list[Poly]:
    """Row over F_q[z] whose j-th entry collects the v_j-coordinates of f."""
    A = f.ring.algebra
    F = A.field
    return [Poly(F, [c.coords[j] for c in f.coeffs], "z") for j in range(A.dim)]


def devectorize(R: OreRing, row: Sequence[Poly]) -> OrePolynomial:
    A = R.algebra
    if len(row) != A.dim:
        raise ValueError(f"expected a row of length {A.dim}, got {len(row)}")
    F = A.field
    deg = max((p.degree for p in row), default=-1)
    coeffs = [A.element([row[j][i] for j in range(A.dim)]) for i in range(deg + 1)]
    return OrePolynomial(R, coeffs)


def make_ore_ring(A: Algebra, sigma_spec: dict | LinearMap | None = None,
                  delta_spec: dict | LinearMap | None = None) -> OreRing:
    """Ore ring from map specs accepted by :func:`construct_map`."""
    if sigma_spec is None or isinstance(sigma_spec, LinearMap):
        sigma = sigma_spec
    else:
        sigma = construct_map(A, sigma_spec, "automorphism")
    if sigma is None:
        sigma = LinearMap.identity(A)
    if delta_spec is None or isinstance(delta_spec, LinearMap):
        delta = delta_spec
    else:
        delta = construct_map(A, delta_spec, "derivation", sigma)
    return OreRing(A, sigma, delta)
