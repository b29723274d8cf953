import itertools

import pytest

from skewideal.field import make_field
from skewideal.idealcode import basic_encoder, compute_idempotent
from skewideal.metrics import (
    SearchTooLarge,
    code_degree,
    column_distance,
    free_distance,
    row_distance,
    row_reduced,
    singleton_bound,
)
from skewideal.poly import Poly
from skewideal.polymatrix import PolyMatrix, same_row_space
from skewideal.separability import build_separability, lift_to_ore

from cases import ccc, m2f8


def encoder(ex):
    sep = lift_to_ore(build_separability(ex.A, ex.sigma).element, ex.R)
    return basic_encoder(compute_idempotent([ex.g], sep))


def oracle_column_distance(enc: PolyMatrix, j: int) -> int:
    """Enumerate u_0..u_j with Poly arithmetic and weigh the first j+1 blocks."""
    F = enc.field
    k, n = enc.shape
    best = None
    for flat in itertools.product(range(F.order), repeat=k * (j + 1)):
        if not any(flat[:k]):
            continue
        u = [Poly(F, [flat[s * k + i] for s in range(j + 1)]) for i in range(k)]
        v = [Poly.zero(F) for _ in range(n)]
        for i in range(k):
            v = [x + u[i] * y for x, y in zip(v, enc.rows[i])]
        w = sum(1 for x in v for d in range(j + 1) if x[d] != F.zero)
        best = w if best is None else min(best, w)
    return best


@pytest.mark.parametrize("make", [ccc, m2f8])
def test_column_distance_oracle(make):
    enc = row_reduced(encoder(make()))
    for j in (0, 1):
        assert column_distance(enc, j) == oracle_column_distance(enc, j)


def test_commutative_profile():
    enc = encoder(ccc())
    assert code_degree(enc) == 2
    prof = free_distance(enc, 4)
    assert prof.column_distances == [3, 4, 5]
    assert prof.singleton_bound == 5
    assert (prof.free_distance, prof.certificate) == (5, "MDS")
    assert row_distance(row_reduced(enc), 0) >= 5


def test_matrix_profile():
    enc = encoder(m2f8())
    prof = free_distance(enc, 4)
    assert prof.column_distances == [1, 3, 4]
    assert prof.row_distances[0] == 4
    assert (prof.free_distance, prof.certificate) == (4, "sandwich")
    assert prof.free_distance <= prof.singleton_bound


def test_row_reduced_keeps_row_space():
    for make in (ccc, m2f8):
        enc = encoder(make())
        red = row_reduced(enc)
        assert same_row_space(enc, red)
        lead = [[e[max(x.degree for x in r)] for e in r] for r in red.rows]
        from skewideal.linalg import rank
        assert rank(red.field, lead) == red.nrows


def test_identity_encoder():
    F = make_field(2, 2, [1, 1, 1])
    prof = free_distance(PolyMatrix.identity(F, 3), 3)
    assert (prof.free_distance, prof.certificate) == (1, "sandwich")


def test_singleton_formula():
    assert singleton_bound(5, 3, 2) == 5
    assert singleton_bound(4, 2, 2) == 7


def test_search_cap():
    enc = encoder(m2f8())
    with pytest.raises(SearchTooLarge):
        column_distance(enc, 3, cap=1000)
    prof = free_distance(enc, 0)
    assert prof.free_distance is None and prof.certificate == "exhausted"
    assert prof.bracket == (1, 4)


def test_negative_j():
    enc = encoder(ccc())
    with pytest.raises(ValueError):
        column_distance(enc, -1)
