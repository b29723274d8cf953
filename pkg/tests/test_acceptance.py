"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s -v`` or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from skewideal.algebra import construct_algebra
from skewideal.cli import main as cli_main
from skewideal.config import load_config
from skewideal.field import make_field
from skewideal.idealcode import basic_encoder, compute_idempotent, generator_matrix, smith_of
from skewideal.maps import LinearMap
from skewideal.metrics import code_degree, free_distance
from skewideal.ore import OrePolynomial
from skewideal.poly import Poly
from skewideal.polymatrix import PolyMatrix, hermite_row_form, is_basic, same_row_space, smith_normal_form
from skewideal.separability import (
    SeparabilityError,
    TensorElement,
    build_separability,
    check_separability,
    group_element,
    lift_to_ore,
    tensor_twist,
)
from skewideal.textio import parse_algebra_element, parse_ore

from cases import FIXTURES, ccc, m2f8, printed_matrix, printed_ore, swap_derivation_ring


def _idempotent_ok(code, e: OrePolynomial) -> None:
    assert e * e == e, "e^2 != e"
    for g in code.generators:
        assert (g * (code.ring.one() - e)).is_zero(), "g(1 - e) != 0"
    assert hermite_row_form(generator_matrix([e])) == hermite_row_form(code.generator_matrix), "row spaces differ"


def _pipeline(job):
    sep = lift_to_ore(build_separability(job.algebra, job.sigma, job.delta, job.strategy, job.j,
                                         base_strategy=job.base_strategy).element, job.ring)
    return compute_idempotent(job.generators, sep)


def _block_diag(F, A: PolyMatrix, n: int) -> PolyMatrix:
    k = A.nrows
    rows = [list(r) + [Poly.zero(F)] * (n - k) for r in A.rows]
    rows += [[Poly.one(F) if c == r else Poly.zero(F) for c in range(n)] for r in range(k, n)]
    return PolyMatrix(F, rows, n)


def _diag_ones(F, n: int, k: int) -> PolyMatrix:
    return PolyMatrix(F, [[Poly.one(F) if i == j < k else Poly.zero(F) for j in range(n)] for i in range(n)], n)


def _printed_smith_factors(ex, k: int) -> None:
    """Check the printed Q (and M_h, M_s, M) of an example with rank k."""
    F, n = ex.F, ex.A.dim
    M = generator_matrix([ex.g])
    Q = printed_matrix(ex, "Q")
    assert Q.det().is_constant() and not Q.det().is_zero(), "printed Q is not unimodular"
    MQ = M @ Q
    assert MQ.submatrix(range(n), range(k, n)).is_zero(), "M(g) Q has nonzero trailing columns"
    Qinv_d = smith_normal_form(Q)
    Q_inv = Qinv_d.Q @ Qinv_d.P
    assert Q @ Q_inv == PolyMatrix.identity(F, n)
    Mh = Q.submatrix(range(n), range(k, n))
    Ms = Q_inv.submatrix(range(k, n), range(n))
    assert Mh == printed_matrix(ex, "M_h"), "printed M_h"
    assert Ms == printed_matrix(ex, "M_s"), "printed M_s"
    assert Mh @ Ms == printed_matrix(ex, "M"), "printed M"


def check_1() -> None:
    ex = ccc()
    job = load_config(FIXTURES / "ccc_f4_x5.json")
    M, snf = smith_of(job.generators)
    assert M == printed_matrix(ex, "M(g)"), "M(g) differs from the printed matrix"
    assert is_basic(snf), "Smith form not basic"
    code = _pipeline(job)
    assert (code.n, code.k) == (5, 3)
    assert code_degree(basic_encoder(code)) == 2
    _idempotent_ok(code, code.idempotent)

    # printed data, checked in the example's own ring
    code = compute_idempotent([ex.g], lift_to_ore(build_separability(ex.A, ex.sigma).element, ex.R))
    e_printed = printed_ore(ex, "e")
    _idempotent_ok(code, e_printed)
    f_printed = printed_ore(ex, "f")
    assert e_printed + f_printed == ex.R.one()
    assert generator_matrix([f_printed]) == printed_matrix(ex, "M(f)"), "printed M(f)"

    _printed_smith_factors(ex, 3)
    # the example does not print P; build one from the printed Q and verify P M(g) Q = H
    n, k = 5, 3
    Q = printed_matrix(ex, "Q")
    X = (M @ Q).submatrix(range(n), range(k))
    d = smith_normal_form(X)
    assert is_basic(d) and d.rank == k
    P = _block_diag(ex.F, d.Q, n) @ d.P
    assert P.det().is_constant() and not P.det().is_zero()
    assert P @ M @ Q == _diag_ones(ex.F, n, k), "P M(g) Q != diag(1, 1, 1, 0, 0)"


def check_2() -> None:
    ex = ccc()
    code = compute_idempotent([ex.g], lift_to_ore(build_separability(ex.A, ex.sigma).element, ex.R))
    prof = free_distance(basic_encoder(code), 4)
    assert prof.column_distances == [3, 4, 5], prof.column_distances
    assert prof.singleton_bound == 5
    assert (prof.free_distance, prof.certificate) == (5, "MDS"), (prof.free_distance, prof.certificate)


def check_3() -> None:
    ex = m2f8()
    F = ex.F
    M = generator_matrix([ex.g])
    assert M == printed_matrix(ex, "M(g)"), "M(g) differs from the printed matrix"
    P, Q = printed_matrix(ex, "P"), printed_matrix(ex, "Q")
    assert P @ M @ Q == _diag_ones(F, 4, 2), "printed P M(g) Q != diag(1, 1, 0, 0)"
    assert P.det().is_constant() and Q.det().is_constant()
    _printed_smith_factors(ex, 2)

    job = load_config(FIXTURES / "m2f8.json")
    code = _pipeline(job)
    assert (code.n, code.k) == (4, 2)
    _idempotent_ok(code, code.idempotent)
    e_printed = parse_ore(job.ring, ex.printed["e"])
    _idempotent_ok(code, e_printed)
    assert same_row_space(generator_matrix([code.idempotent]), generator_matrix([e_printed]))
    assert printed_ore(ex, "e") + printed_ore(ex, "f") == ex.R.one()

    prof = free_distance(basic_encoder(code), 4)
    assert prof.column_distances == [1, 3, 4], prof.column_distances
    assert prof.row_distances[0] == 4
    assert (prof.free_distance, prof.certificate) == (4, "sandwich")


def _printed_tensor(ex) -> TensorElement:
    return TensorElement(ex.A, [(parse_algebra_element(ex.A, a), parse_algebra_element(ex.A, b))
                                for a, b in ex.printed["p"]])


def check_4() -> None:
    for ex, strategy in ((ccc(), "auto"), (m2f8(), "average")):
        res = build_separability(ex.A, ex.sigma, None, strategy, 1)
        printed = _printed_tensor(ex)
        assert res.element == printed, f"{strategy} element differs from the printed one"
        assert len(res.element) == len(printed)
        if strategy == "auto":
            got = [(a.coords, b.coords) for a, b in res.element.pairs]
            assert got == [(a.coords, b.coords) for a, b in printed.pairs], "term order"
        assert check_separability(printed).ok
        sp, dp = tensor_twist(printed, ex.sigma, LinearMap.zero(ex.A, ex.sigma))
        assert sp == printed, "not sigma-invariant"
        assert dp.is_zero()


def check_5() -> None:
    R = swap_derivation_ring()
    A = R.algebra
    e10, e01 = R.constant(A.element([1, 0])), R.constant(A.element([0, 1]))
    alpha = R.z() * e10 + R.constant(A.one())
    assert (e10 * alpha).is_zero()
    assert e01 * alpha == alpha
    za = R.z() * alpha
    assert za == R.z() * R.z() * e10 + R.z()
    assert not za.is_zero()
    assert (e01 * R.z() * alpha).is_zero()


def check_6() -> None:
    import test_properties as props

    props.test_smith_identity()
    props.test_smith_identity_dense_seeded()
    props.test_hermite_row_space_invariance()
    props.test_ore_associativity()
    props.test_algebra_associativity()
    props.test_quotient_against_poly()
    props.test_dual_basis_expansion()
    props.test_twisted_separability_element()
    F4 = make_field(2, 2, [1, 1, 1])
    for order in (3, 5):
        A = construct_algebra(F4, {"type": "cyclic", "order": order})
        assert check_separability(group_element(A)).ok
    S3 = construct_algebra(F4, {"type": "symmetric", "degree": 3})
    try:
        group_element(S3)
    except SeparabilityError:
        pass
    else:
        raise AssertionError("S_3 over F_4 must be rejected")


def check_7() -> None:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = cli_main(["idempotent", str(FIXTURES / "nonbasic.json")])
    assert status == 1, status
    assert out.getvalue() == ""
    assert err.getvalue().startswith("Smith form not basic: invariant factor")
    job = load_config(FIXTURES / "nonbasic.json")
    code = compute_idempotent(job.generators, None)
    assert not code.basic and code.idempotent is None


CRITERIA = [
    (1, "commutative example end to end", check_1, 10),
    (2, "commutative distances, MDS", check_2, 30),
    (3, "matrix example end to end", check_3, 60),
    (4, "separability constructions", check_4, None),
    (5, "counterexample products", check_5, None),
    (6, "property suites", check_6, None),
    (7, "non-basic Smith form exits 1", check_7, None),
]


def run_criterion(number: int) -> tuple[bool, str]:
    _, title, check, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        check()
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            raise AssertionError(f"took {elapsed:.1f} s, limit {limit} s")
    except Exception as exc:
        return False, f"FAIL criterion {number}: {title} ({type(exc).__name__}: {exc})"
    return True, f"PASS criterion {number}: {title} ({elapsed:.2f} s)"


def _assert_criterion(number: int, capsys) -> None:
    ok, line = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_criterion_1(capsys):
    _assert_criterion(1, capsys)


def test_criterion_2(capsys):
    _assert_criterion(2, capsys)


def test_criterion_3(capsys):
    _assert_criterion(3, capsys)


def test_criterion_4(capsys):
    _assert_criterion(4, capsys)


def test_criterion_5(capsys):
    _assert_criterion(5, capsys)


def test_criterion_6(capsys):
    _assert_criterion(6, capsys)


def test_criterion_7(capsys):
    _assert_criterion(7, capsys)


if __name__ == "__main__":
    results = [run_criterion(n) for n, *_ in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
