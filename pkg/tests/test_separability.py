import itertools

import pytest

from skewideal.algebra import block_decomposition, construct_algebra
from skewideal.field import make_field, trace
from skewideal.maps import LinearMap, construct_map
from skewideal.ore import OreRing
from skewideal.separability import (
    SeparabilityError,
    TensorElement,
    apply_map,
    build_separability,
    check_separability,
    group_element,
    lift_to_ore,
    matrix_units_element,
    normal_dual_element,
    tensor_twist,
)
from skewideal.textio import parse_algebra_element

from cases import ccc, m2f8, swap_derivation_ring

F4 = make_field(2, 2, [1, 1, 1])
F8 = make_field(2, 3, [1, 1, 0, 1])


def tensor(A, pairs):
    return TensorElement(A, [(parse_algebra_element(A, a), parse_algebra_element(A, b)) for a, b in pairs])


def test_printed_commutative_element():
    ex = ccc()
    res = build_separability(ex.A, ex.sigma)
    assert res.strategy == "orbit-lift"
    assert res.element == tensor(ex.A, ex.printed["p"])
    got = [(a.coords, b.coords) for a, b in res.element.pairs]
    want = [(a.coords, b.coords) for a, b in tensor(ex.A, ex.printed["p"]).pairs]
    assert got == want


def test_printed_matrix_element():
    ex = m2f8()
    res = build_separability(ex.A, ex.sigma, None, "average", 1)
    printed = tensor(ex.A, ex.printed["p"])
    assert res.element == printed
    assert len(res.element.pairs) == 6
    assert build_separability(ex.A, ex.sigma).element == printed


def test_block_shift_element():
    A = construct_algebra(F4, {"type": "direct_sum", "components": [{"type": "matrix", "size": 2}] * 2})
    B = A.info["components"][0]
    U = parse_algebra_element(B, "a^2 E11 + a^2 E12 + a E21 + a^2 E22")
    sigma = construct_map(A, {"type": "block_shift", "block": {"type": "inner", "unit": U}})
    res = build_separability(A, sigma, None, "orbit-lift", 1)
    printed = tensor(A, [
        ("E11@0", "E11@0"),
        ("E21@0", "E12@0"),
        ("a^2 E11@1 + a^2 E12@1 + a E21@1 + a E22@1", "a^2 E11@1 + a^2 E12@1 + a E21@1 + a E22@1"),
        ("a^2 E11@1 + a^2 E12@1 + a^2 E21@1 + a^2 E22@1", "a E11@1 + a^2 E12@1 + E21@1 + a E22@1"),
    ])
    assert res.element == printed
    assert tensor_twist(printed, sigma)[0] == printed


def test_one_tensor_one():
    A1 = construct_algebra(F4, {"type": "quotient", "modulus": [1, 1]})
    assert check_separability(TensorElement(A1, [(A1.one(), A1.one())])).ok
    M2 = construct_algebra(F8, {"type": "matrix", "size": 2})
    rep = check_separability(TensorElement(M2, [(M2.one(), M2.one())]))
    assert rep.mu_is_one and not rep.ok
    # no E_ij is central, so every basis index fails
    assert set(rep.commuting_failures) == {0, 1, 2, 3}


def test_group_elements():
    for order in (3, 5):
        A = construct_algebra(F4, {"type": "cyclic", "order": order})
        p = group_element(A)
        rep = check_separability(p)
        assert rep.ok
        # brute force: v_k p = p v_k for every group element
        for k in range(order):
            v = A.basis(k)
            assert p.left_multiply(v) == p.right_multiply(v)
        assert build_separability(A, None, None, "group").strategy == "group"
    S3 = construct_algebra(F4, {"type": "symmetric", "degree": 3})
    with pytest.raises(SeparabilityError):
        group_element(S3)
    with pytest.raises(SeparabilityError):
        build_separability(S3, None, None, "group")


def test_twists_trivial_maps():
    ex = m2f8()
    p = matrix_units_element(ex.A, 1)
    I = LinearMap.identity(ex.A)
    sp, dp = tensor_twist(p, I, LinearMap.zero(ex.A, I))
    assert sp == p and dp.is_zero()


def test_lift_rejects_non_invariant():
    ex = m2f8()
    p1 = matrix_units_element(ex.A, 1)
    assert check_separability(p1).ok
    assert tensor_twist(p1, ex.sigma)[0] != p1
    with pytest.raises(SeparabilityError):
        lift_to_ore(p1, ex.R)
    with pytest.raises(SeparabilityError):
        build_separability(ex.A, ex.sigma, None, "matrix-units", 1)


def test_lift_with_identity_sigma():
    A = construct_algebra(F8, {"type": "matrix", "size": 2})
    R = OreRing(A)
    lifted = lift_to_ore(matrix_units_element(A, 2), R)
    assert all(a.degree == 0 and b.degree == 0 for a, b in lifted.pairs)


def test_normal_dual_field():
    A = construct_algebra(F4, {"type": "quotient", "modulus": [1, 2, 1]})  # x^2 + a x + 1
    p = normal_dual_element(A)
    assert len(p.pairs) == 2
    assert check_separability(p).ok
    with pytest.raises(SeparabilityError):
        normal_dual_element(construct_algebra(F4, {"type": "quotient", "modulus": [1, 0, 0, 0, 0, 1]}))


def test_normal_dual_trace_identity():
    # F_16 presented over F_4 as F_4[x]/(x^2 + a x + 1)
    from skewideal.field import normal_dual_bases
    from skewideal.poly import QuotientField
    from skewideal.textio import parse_poly
    K = QuotientField(F4, parse_poly(F4, "x^2 + a x + 1", "x"))
    basis, dual = normal_dual_bases(K, 4)
    for i, j in itertools.product(range(2), repeat=2):
        t = trace(basis[i] * dual[j], 4)
        assert t.to_poly().degree <= 0
        assert t.to_poly().is_one() == (i == j)


def test_swap_derivation_ring_rejects_auto_element():
    R = swap_derivation_ring()
    with pytest.raises(SeparabilityError, match="delta"):
        build_separability(R.algebra, R.sigma, R.delta)


def test_sigma_image_is_separability_element():
    ex = ccc()
    p = build_separability(ex.A, ex.sigma).element
    bd = block_decomposition(ex.A)
    for e in bd.idempotents:
        assert ex.sigma(e) in bd.idempotents
    assert check_separability(apply_map(p, ex.sigma)).ok


def test_block_sum_strategy():
    A = construct_algebra(F4, {"type": "direct_sum", "components": [
        {"type": "matrix", "size": 2}, {"type": "quotient", "modulus": [1, 1, 1]}]})
    res = build_separability(A, None, None, "block-sum", 1)
    assert res.report.ok


def test_unknown_strategy():
    ex = ccc()
    with pytest.raises(SeparabilityError):
        build_separability(ex.A, ex.sigma, None, "magic")
