"""Generating idempotents of ideal codes in A[z; sigma, delta].

Given generators G of a left ideal I, M(G) stacks the rows v(v_i g_j).
I is an ideal code iff the Smith form of M(G) is basic; then, with
H = P M(G) Q and k = rank, the matrix M = (last n-k columns of Q)(last
n-k rows of Q^{-1}) turns a separability element sum a_i (x) b_i into
f = sum a_i p(v(b_i) M), and e = 1 - f generates I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ore import OrePolynomial, OreRing, devectorize, vectorize
from .polymatrix import (
    PolyMatrix,
    SmithDecomposition,
    first_obstruction,
    is_basic,
    same_row_space,
    smith_normal_form,
)
from .separability import LiftedSeparability


class NotAnIdealCode(Exception):
    """The Smith form of M(G) has a non-unit invariant factor."""

    def __init__(self, position: int, factor):
        self.position = position
        self.factor = factor
        super().__init__(f"Smith form not basic: invariant factor {factor} at position {position}")


class VerificationError(AssertionError):
    pass


def generator_matrix(G: Sequence[OrePolynomial]) -> PolyMatrix:
    """Rows v(v_i g_j), generator-major."""
    G = list(G)
    if not G or all(g.is_zero() for g in G):
        raise ValueError("generators must be nonempty and not all zero")
    R = G[0].ring
    A = R.algebra
    rows = []
    for g in G:
        if g.ring is not R:
            raise ValueError("generators from different rings")
        for i in range(A.dim):
            rows.append(vectorize(R.constant(A.basis(i)) * g))
    return PolyMatrix(A.field, rows)


@dataclass(frozen=True)
class IdealCode:
    ring: OreRing
    generators: tuple[OrePolynomial, ...]
    generator_matrix: PolyMatrix
    smith: SmithDecomposition
    basic: bool
    k: int
    idempotent: OrePolynomial | None = None

    @property
    def n(self) -> int:
        return self.ring.algebra.dim

    @property
    def complement(self) -> OrePolynomial:
        self._need_basic()
        return self.ring.one() - self.idempotent

    def _need_basic(self) -> None:
        if not self.basic or self.idempotent is None:
            pos, fac = first_obstruction(self.smith)
            raise NotAnIdealCode(pos, fac)


def smith_of(G: Sequence[OrePolynomial]) -> tuple[PolyMatrix, SmithDecomposition]:
    M = generator_matrix(G)
    return M, smith_normal_form(M)


def compute_idempotent(G: Sequence[OrePolynomial], sep: LiftedSeparability | None) -> IdealCode:
    """Run the idempotent algorithm; a non-basic Smith form yields basic=False and no idempotent."""
    G = tuple(G)
    M, snf = smith_of(G)
    R = G[0].ring
    if not is_basic(snf):
        return IdealCode(R, G, M, snf, False, snf.rank)
    if sep is None or sep.ring is not R:
        raise ValueError("a lifted separability element of the same ring is required")
    n, k = R.algebra.dim, snf.rank
    proj = snf.Q.submatrix(range(n), range(k, n)) @ snf.Q_inv.submatrix(range(k, n), range(n))
    f = R.zero()
    for a, b in sep.pairs:
        fi = devectorize(R, proj.vecmul(vectorize(b)))
        f = f + a * fi
    e = R.one() - f
    code = IdealCode(R, G, M, snf, True, k, e)
    verify(code)
    return code


def verify(code: IdealCode) -> None:
    """Re-check e^2 = e, g(1 - e) = 0 and that M({e}) and M(G) span the same rows."""
    e = code.idempotent
    if e * e != e:
        raise VerificationError("e^2 != e")
    f = code.complement
    for i, g in enumerate(code.generators):
        if not (g * f).is_zero():
            raise VerificationError(f"g_{i} (1 - e) != 0")
    if not same_row_space(generator_matrix([e]), code.generator_matrix):
        raise VerificationError("R e and the ideal generated by G differ")
    if not same_row_space(basic_encoder(code), code.generator_matrix):
        raise VerificationError("encoder rows do not span the code")


def parity_check_matrix(code: IdealCode) -> PolyMatrix:
    """M({1 - e}); r lies in the code iff r (1 - e) = 0."""
    code._need_basic()
    f = code.complement
    if f.is_zero():
        return PolyMatrix.zeros(code.ring.field, code.n, code.n)
    return generator_matrix([f])


def basic_encoder(code: IdealCode) -> PolyMatrix:
    """First k rows of Q^{-1}: a basic k x n generator matrix of the code."""
    if not code.basic:
        code._need_basic()
    return code.smith.Q_inv.submatrix(range(code.k), range(code.n))
