import math

from skewideal.field import make_field
from skewideal.polymatrix import (
    PolyMatrix,
    first_obstruction,
    hermite_row_form,
    is_basic,
    max_minor_degree,
    same_row_space,
    smith_normal_form,
)
from skewideal.textio import parse_polymatrix

F2 = make_field(2)
F4 = make_field(2, 2, [1, 1, 1])


def pm(F, text):
    return parse_polymatrix(F, text)


def check_smith(M):
    d = smith_normal_form(M)
    assert d.P @ M @ d.Q == d.H
    assert d.P.det().is_constant() and not d.P.det().is_zero()
    assert d.Q.det().is_constant() and not d.Q.det().is_zero()
    n = M.ncols
    assert d.Q @ d.Q_inv == PolyMatrix.identity(M.field, n)
    assert d.Q_inv @ d.Q == PolyMatrix.identity(M.field, n)
    facs = d.invariant_factors
    for i in range(d.H.nrows):
        for j in range(d.H.ncols):
            if i != j:
                assert d.H.rows[i][j].is_zero()
    for a, b in zip(facs, facs[1:]):
        assert (b % a).is_zero()
    return d


def test_identity_smith():
    d = check_smith(PolyMatrix.identity(F4, 3))
    assert d.H == PolyMatrix.identity(F4, 3)
    assert d.P == d.Q == PolyMatrix.identity(F4, 3)
    assert is_basic(d) and d.rank == 3


def test_non_basic():
    d = check_smith(pm(F4, "[1, 0, 0]\n[0, z + a, 0]\n[0, 0, 0]"))
    assert not is_basic(d)
    assert d.rank == 2
    pos, fac = first_obstruction(d)
    assert pos == 2 and str(fac) == "z + a"


def test_zero_matrix_is_basic():
    d = check_smith(PolyMatrix.zeros(F2, 2, 3))
    assert is_basic(d) and d.rank == 0
    assert first_obstruction(d) is None


def test_invariant_factors_normalized():
    d = check_smith(pm(F4, "[a z^2, 0]\n[0, a^2 z]"))
    assert [str(f) for f in d.invariant_factors] == ["z", "z^2"]


def test_hermite_example():
    M = pm(F2, "[z, 1]\n[z^2, z]")
    H = hermite_row_form(M)
    assert H == pm(F2, "[z, 1]\n[0, 0]")
    # rank oracle: the second row is z times the first
    assert M.rows[1][0] == M.rows[0][0] * M.rows[0][0]
    assert hermite_row_form(H) == H


def test_hermite_identity_and_stack():
    I = PolyMatrix.identity(F4, 3)
    assert hermite_row_form(I) == I
    M = pm(F4, "[z + 1, a, 0]\n[0, z, a z^2 + 1]")
    comb = pm(F4, "[z^2 + a, a^2 z]") @ M
    assert hermite_row_form(M.stack(comb)).nonzero_rows() == hermite_row_form(M).nonzero_rows()
    assert same_row_space(M, M.stack(comb))
    assert not same_row_space(M, M.submatrix([0], range(3)))


def test_max_minor_degree():
    assert max_minor_degree(PolyMatrix.identity(F2, 3), 3) == 0
    assert max_minor_degree(pm(F2, "[z, 0]\n[0, z]"), 2) == 2
    assert max_minor_degree(PolyMatrix.zeros(F2, 2, 2), 2) == -math.inf
