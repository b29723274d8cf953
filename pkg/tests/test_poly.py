import pytest

from skewideal.field import make_field
from skewideal.poly import (
    Poly,
    berlekamp_factor,
    euclidean_divide,
    gcd,
    is_irreducible,
    quotient_idempotents,
    squarefree_decomposition,
    xgcd,
)
from skewideal.textio import parse_poly

F4 = make_field(2, 2, [1, 1, 1])


def px(text):
    return parse_poly(F4, text, "x")


def test_division():
    q, r = euclidean_divide(px("x^5 + 1"), px("x + 1"))
    assert q == px("x^4 + x^3 + x^2 + x + 1")
    assert r.is_zero()
    q, r = euclidean_divide(px("x^3 + a"), px("x^2 + x"))
    assert q * px("x^2 + x") + r == px("x^3 + a")
    assert r.degree < 2
    with pytest.raises(ZeroDivisionError):
        euclidean_divide(px("x"), Poly.zero(F4, "x"))


def test_xgcd_bezout():
    a, b = px("x^5 + 1"), px("x^3 + a x + 1")
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g == gcd(a, b)
    g, s, t = xgcd(px("x^2 + x"), px("x"))
    assert g == px("x")


def test_factor_x5_minus_1():
    fac = berlekamp_factor(px("x^5 + 1"))
    assert fac == [(px("x + 1"), 1), (px("x^2 + a x + 1"), 1), (px("x^2 + a^2 x + 1"), 1)]
    assert all(is_irreducible(f) for f, _ in fac)


def test_factor_with_multiplicity():
    f = px("x + 1") * px("x + 1") * px("x^2 + a x + 1")
    assert sorted(berlekamp_factor(f), key=lambda t: t[0].degree) == [(px("x + 1"), 2), (px("x^2 + a x + 1"), 1)]
    sq = squarefree_decomposition(f)
    prod = Poly.one(F4, "x")
    for g, m in sq:
        for _ in range(m):
            prod = prod * g
    assert prod == f


def test_quotient_idempotents():
    f = px("x^5 + 1")
    es = quotient_idempotents(f)
    assert es[0] == px("x^4 + x^3 + x^2 + x + 1")
    total = Poly.zero(F4, "x")
    for i, e in enumerate(es):
        assert euclidean_divide(e * e, f)[1] == e
        for e2 in es[i + 1:]:
            assert euclidean_divide(e * e2, f)[1].is_zero()
        total = total + e
    assert total.is_one()
    F2 = make_field(2)
    es = quotient_idempotents(parse_poly(F2, "x^2 + x", "x"))
    assert sorted(map(str, es)) == ["x", "x + 1"]


def test_squarefree_required():
    with pytest.raises(ValueError):
        quotient_idempotents(px("x^2 + 1"))


def test_ring_ops():
    f = px("a x^2 + 1")
    assert f.degree == 2
    assert f.lc == F4.generator
    assert (f - f).is_zero()
    assert f.monic().lc == 1
    assert f.shift(2) == px("a x^4 + x^2")
    assert f.derivative().is_zero()
