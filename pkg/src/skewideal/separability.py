"""Separability elements p = sum a_i (x) b_i of F_q -> A and their lift to A[z; sigma, delta].

Tensors are compared only through their canonical n^2 coordinates
(coefficient of v_i (x) v_j); the pair list is kept for presentation and
because the idempotent algorithm consumes the pairs directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra, AlgebraElement, AlgebraError, BlockDecomposition, block_decomposition, embed_component
from .field import normal_dual_bases
from .maps import LinearMap, block_action, map_order
from .ore import OrePolynomial, OreRing
from .poly import QuotientField

STRATEGIES = ("auto", "group", "normal-dual", "matrix-units", "average", "orbit-lift", "block-sum")


class SeparabilityError(AlgebraError):
    pass


class TensorElement:
    __slots__ = ("algebra", "pairs", "canonical")

    def __init__(self, algebra: Algebra, pairs: Sequence[tuple[AlgebraElement, AlgebraElement]]):
        self.algebra = algebra
        self.pairs = tuple((a, b) for a, b in pairs)
        for a, b in self.pairs:
            if a.algebra is not algebra or b.algebra is not algebra:
                raise ValueError("tensor factor from a different algebra")
        self.canonical = _canonical(algebra, self.pairs)

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.algebra is not self.algebra:
            raise ValueError("tensors over different algebras")
        return TensorElement(self.algebra, self.pairs + other.pairs)

    def scale(self, c: int) -> TensorElement:
        return TensorElement(self.algebra, [(a * c, b) for a, b in self.pairs])

    def left_multiply(self, r: AlgebraElement) -> TensorElement:
        return TensorElement(self.algebra, [(r * a, b) for a, b in self.pairs])

    def right_multiply(self, r: AlgebraElement) -> TensorElement:
        return TensorElement(self.algebra, [(a, b * r) for a, b in self.pairs])

    def mu(self) -> AlgebraElement:
        acc = self.algebra.zero()
        for a, b in self.pairs:
            acc = acc + a * b
        return acc

    def compact(self) -> TensorElement:
        """Drop pairs with a zero factor."""
        return TensorElement(self.algebra, [(a, b) for a, b in self.pairs if a and b])

    def is_zero(self) -> bool:
        F = self.algebra.field
        return all(c == F.zero for c in self.canonical)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra is other.algebra and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        from .textio import format_algebra_element

        if not self.pairs:
            return "0"
        return " + ".join(f"({format_algebra_element(a)}) (x) ({format_algebra_element(b)})" for a, b in self.pairs)


def _canonical(A: Algebra, pairs) -> tuple:
    F = A.field
    n = A.dim
    out = [F.zero] * (n * n)
    for a, b in pairs:
        for i, x in enumerate(a.coords):
            if x == F.zero:
                continue
            base = i * n
            for j, y in enumerate(b.coords):
                if y != F.zero:
                    out[base + j] = F.add(out[base + j], F.mul(x, y))
    return tuple(out)


@dataclass(frozen=True)
class SeparabilityReport:
    mu_is_one: bool
    commuting_failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.mu_is_one and not self.commuting_failures

    def describe(self) -> str:
        if self.ok:
            return "separability element: OK"
        parts = []
        if not self.mu_is_one:
            parts.append("mu(p) != 1")
        if self.commuting_failures:
            parts.append("v_k p != p v_k for k in " + ", ".join(map(str, self.commuting_failures)))
        return "; ".join(parts)


def check_separability(p: TensorElement) -> SeparabilityReport:
    """Check mu(p) = 1 and v_k p = p v_k for every basis element v_k."""
    A = p.algebra
    fails = tuple(k for k in range(A.dim) if p.left_multiply(A.basis(k)) != p.right_multiply(A.basis(k)))
    return SeparabilityReport(p.mu() == A.one(), fails)


def tensor_twist(p: TensorElement, sigma: LinearMap, delta: LinearMap | None = None):
    """(sigma (x) sigma)(p) and delta(a) (x) sigma(b) + a (x) delta(b) summed over p."""
    if sigma.kind != "automorphism":
        raise ValueError("tensor_twist needs an automorphism")
    if delta is not None and delta.kind != "derivation":
        raise ValueError("tensor_twist needs a sigma-derivation")
    A = p.algebra
    sp = TensorElement(A, [(sigma(a), sigma(b)) for a, b in p.pairs])
    if delta is None:
        return sp, TensorElement(A, [])
    dp = []
    for a, b in p.pairs:
        dp.append((delta(a), sigma(b)))
        dp.append((a, delta(b)))
    return sp, TensorElement(A, dp)


def apply_map(p: TensorElement, m: LinearMap) -> TensorElement:
    return TensorElement(p.algebra, [(m(a), m(b)) for a, b in p.pairs])


def _char_inverse(A: Algebra, m: int, what: str) -> int:
    F = A.field
    if math.gcd(m, F.p) != 1:
        raise SeparabilityError(f"{what} = {m} is divisible by the characteristic {F.p}")
    return F.inv(F.from_int(m))


# -- strategies --


def group_element(A: Algebra) -> TensorElement:
    """|G|^{-1} sum_g g (x) g^{-1}."""
    if A.kind != "group":
        raise SeparabilityError("group strategy needs a group algebra")
    c = _char_inverse(A, A.dim, "group order")
    inv = A.info["inverses"]
    return TensorElement(A, [(A.basis(g) * c, A.basis(inv[g])) for g in range(A.dim)])


def normal_dual_element(A: Algebra) -> TensorElement:
    """sum_i a^{q^i} (x) b^{q^i} for a field F_q[x]/(f) from normal dual bases."""
    if A.kind != "quotient":
        raise SeparabilityError("normal-dual strategy needs a quotient algebra by an irreducible")
    F = A.field
    try:
        K = QuotientField(F, A.info["modulus"])
    except ValueError:
        raise SeparabilityError("normal-dual strategy needs an irreducible modulus; use auto") from None
    basis, dual = normal_dual_bases(K, F.order)
    to_a = lambda v: A.element(list(v.value))
    return TensorElement(A, [(to_a(a), to_a(b)) for a, b in zip(basis, dual)])


def matrix_units_element(A: Algebra, j: int = 1) -> TensorElement:
    """sum_i E_ij (x) E_ji, with K-dual bases w_l, w'_l spliced in when K != F_q."""
    if A.kind == "direct_sum":
        return block_sum([_embed_tensor(A, b, matrix_units_element(c, j))
                          for b, c in enumerate(A.info["components"])])
    if A.kind != "matrix":
        raise SeparabilityError("matrix-units strategy needs a matrix algebra")
    size = A.info["size"]
    if not 1 <= j <= size:
        raise SeparabilityError(f"matrix-units column index j must be in 1..{size}")
    K = A.info["scalar_field"]
    F = A.field
    d = 1 if K is None else K.d
    if K is None:
        duals = [((F.one,), (F.one,))]
    else:
        basis, dual = normal_dual_bases(K, F.order)
        duals = [(a.value, b.value) for a, b in zip(basis, dual)]

    def unit(r, c, w):
        coords = [F.zero] * A.dim
        off = (r * size + c) * d
        coords[off:off + d] = w
        return A.element(coords)

    jj = j - 1
    pairs = [(unit(i, jj, a), unit(jj, i, b)) for i in range(size) for a, b in duals]
    return TensorElement(A, pairs)


def average_element(base: TensorElement, sigma: LinearMap) -> TensorElement:
    """|sigma|^{-1} sum_{i < |sigma|} (sigma^i (x) sigma^i)(base)."""
    A = base.algebra
    m = map_order(sigma)
    c = _char_inverse(A, m, "order of sigma")
    pairs = []
    cur = LinearMap.identity(A)
    for _ in range(m):
        pairs.extend((cur(a) * c, cur(b)) for a, b in base.pairs)
        cur = sigma.compose(cur)
    return TensorElement(A, pairs)


def block_sum(parts: Sequence[TensorElement]) -> TensorElement:
    if not parts:
        raise SeparabilityError("block sum of no elements")
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def _embed_tensor(A: Algebra, block: int, p: TensorElement) -> TensorElement:
    return TensorElement(A, [(embed_component(A, block, a), embed_component(A, block, b)) for a, b in p.pairs])


def _block_representative(A: Algebra, blocks: BlockDecomposition, b: int, j: int) -> TensorElement:
    """Separability element of the block A e_b, embedded in A."""
    if blocks.fields and blocks.fields[b] is not None:
        K = blocks.fields[b]
        basis, dual = normal_dual_bases(K, A.field.order)
        return TensorElement(A, [(blocks.embed(b, x.value), blocks.embed(b, y.value)) for x, y in zip(basis, dual)])
    if A.kind == "direct_sum":
        comp = A.info["components"][b]
        if comp.kind == "matrix":
            inner = matrix_units_element(comp, j)
        elif comp.kind == "quotient":
            inner = normal_dual_element(comp)
        elif comp.kind == "group":
            inner = group_element(comp)
        else:
            raise SeparabilityError(f"no separability element known for a {comp.kind} block")
        return _embed_tensor(A, b, inner)
    if A.kind == "matrix":
        return matrix_units_element(A, j)
    raise SeparabilityError(f"no block representative for a {A.kind} algebra")


def orbit_lift(sigma: LinearMap, blocks: BlockDecomposition | None = None,
               representatives: dict[int, TensorElement] | None = None, j: int = 1,
               average_if_needed: bool = True) -> TensorElement:
    """Spread per-orbit representatives around each sigma-orbit of blocks.

    For an orbit (j_1, ..., j_m) the representative p supported on A e_{j_1}
    must be fixed by sigma^m; the contribution is p + sigma(p) + ... +
    sigma^{m-1}(p) (each applied tensorwise).  A representative that is not
    fixed is averaged over the group generated by sigma^m when its order is
    prime to the characteristic.
    """
    A = sigma.algebra
    if blocks is None:
        blocks = block_decomposition(A)
    action = block_action(sigma, blocks)
    parts = []
    for orbit in action.orbits:
        lead = orbit[0]
        rep = (representatives or {}).get(lead) or _block_representative(A, blocks, lead, j)
        power = sigma.power(len(orbit))
        power.kind = "automorphism"
        if apply_map(rep, power) != rep:
            if not average_if_needed:
                raise SeparabilityError(f"representative of orbit {orbit} is not fixed by sigma^{len(orbit)}")
            rep = average_element(rep, power)
            if apply_map(rep, power) != rep:  # pragma: no cover - averaging always fixes
                raise SeparabilityError(f"averaging failed to fix the representative of orbit {orbit}")
        cur = rep
        for _ in orbit:
            parts.append(cur)
            cur = apply_map(cur, sigma)
    return block_sum(_reorder(parts, action.orbits))


def _reorder(parts: list[TensorElement], orbits) -> list[TensorElement]:
    # parts holds, orbit by orbit, [p_j, sigma(p_j), ...]; emit all p_j, then images
    heads, tails = [], []
    pos = 0
    for orbit in orbits:
        heads.append(parts[pos])
        tails.extend(parts[pos + 1:pos + len(orbit)])
        pos += len(orbit)
    return heads + tails


@dataclass
class SeparabilityResult:
    element: TensorElement
    strategy: str
    report: SeparabilityReport
    notes: list[str] = dc_field(default_factory=list)


def _is_invariant(p: TensorElement, sigma: LinearMap, delta: LinearMap | None) -> tuple[bool, bool]:
    sp, dp = tensor_twist(p, sigma, delta)
    return sp == p, dp.is_zero()


def build_separability(A: Algebra, sigma: LinearMap | None = None, delta: LinearMap | None = None,
                       strategy: str = "auto", j: int = 1, base: TensorElement | None = None,
                       base_strategy: str = "matrix-units",
                       pairs: Sequence[tuple[AlgebraElement, AlgebraElement]] | None = None) -> SeparabilityResult:
    """Construct a separability element with the named strategy and verify it.

    The result passes check_separability, is fixed by sigma (x) sigma and is
    killed by the delta twist; otherwise :class:`SeparabilityError` says
    which condition failed.
    """
    if sigma is None:
        sigma = LinearMap.identity(A)
    if delta is not None and delta.is_zero():
        delta = None
    notes: list[str] = []
    used = strategy
    if pairs is not None:
        p = TensorElement(A, pairs)
        used = "explicit"
    elif strategy == "auto":
        if A.kind == "group":
            _check_group_maps(A, sigma, delta)
            p, used = group_element(A), "group"
        elif A.kind == "quotient" and A.is_commutative():
            p, used = orbit_lift(sigma, block_decomposition(A), j=j, average_if_needed=False), "orbit-lift"
        elif A.kind in ("direct_sum", "matrix"):
            p, used = orbit_lift(sigma, block_decomposition(A), j=j), "orbit-lift"
        else:
            raise SeparabilityError(f"auto strategy does not cover a {A.kind} algebra")
        if delta is not None and A.kind != "group":
            notes.append("auto strategies assume delta = 0; the delta check below decides")
    elif strategy == "group":
        _check_group_maps(A, sigma, delta)
        p = group_element(A)
    elif strategy == "normal-dual":
        p = normal_dual_element(A)
    elif strategy == "matrix-units":
        p = matrix_units_element(A, j)
    elif strategy == "average":
        if base is None:
            if base_strategy == "average":
                raise SeparabilityError("average needs a base element from another strategy")
            base = build_separability(A, LinearMap.identity(A), None, base_strategy, j).element
        p = average_element(base, sigma)
    elif strategy == "orbit-lift":
        p = orbit_lift(sigma, block_decomposition(A), j=j)
    elif strategy == "block-sum":
        if A.kind != "direct_sum":
            raise SeparabilityError("block-sum needs a direct sum")
        parts = []
        for b, comp in enumerate(A.info["components"]):
            parts.append(_embed_tensor(A, b, build_separability(comp, None, None, "auto", j).element))
        p = block_sum(parts)
    else:
        raise SeparabilityError(f"unknown strategy {strategy!r}")

    report = check_separability(p)
    if not report.ok:
        raise SeparabilityError(f"{used}: {report.describe()}")
    fixed, killed = _is_invariant(p, sigma, delta)
    if not fixed:
        raise SeparabilityError(f"{used}: element is not invariant under sigma (x) sigma")
    if not killed:
        raise SeparabilityError(f"{used}: delta twist of the element is not zero")
    # a twisted separability element must again be one
    if not check_separability(apply_map(p, sigma)).ok:  # pragma: no cover
        raise SeparabilityError("sigma (x) sigma image fails the separability check")
    return SeparabilityResult(p, used, report, notes)


def _check_group_maps(A: Algebra, sigma: LinearMap, delta: LinearMap | None) -> None:
    basis = {A.basis(i) for i in range(A.dim)}
    for i in range(A.dim):
        if sigma(A.basis(i)) not in basis:
            raise SeparabilityError("group strategy needs sigma to permute the group elements")
        if delta is not None and not delta(A.basis(i)).is_zero():
            raise SeparabilityError("group strategy needs delta to vanish on the group elements")


@dataclass(frozen=True)
class LiftedSeparability:
    """Pairs of degree-0 Ore polynomials forming a separability element of F_q[z] in R."""

    ring: OreRing
    pairs: tuple[tuple[OrePolynomial, OrePolynomial], ...]
    source: TensorElement


def lift_to_ore(p: TensorElement, R: OreRing) -> LiftedSeparability:
    if p.algebra is not R.algebra:
        raise ValueError("tensor and ring over different algebras")
    if not check_separability(p).ok:
        raise SeparabilityError("not a separability element of A")
    delta = R.delta if R.has_derivation else None
    fixed, killed = _is_invariant(p, R.sigma, delta)
    if not fixed or not killed:
        raise SeparabilityError("element is not fixed by sigma and killed by delta; the lift does not apply")
    return LiftedSeparability(R, tuple((R.constant(a), R.constant(b)) for a, b in p.pairs), p)
