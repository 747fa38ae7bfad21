from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgrep.scalars import (
    CycScalar,
    LaurentScalar,
    cyclotomic_polynomial,
    gauss_sum,
    q_var,
    qbinom,
    qbrace,
    qbrace_falling,
    qint,
    qmultinom,
    scalars_suite,
    specialize,
    zeta,
)


def cyc(r):
    dim = len(cyclotomic_polynomial(r)) - 1
    coeff = st.fractions(min_value=-6, max_value=6, max_denominator=5)
    return st.lists(coeff, min_size=dim, max_size=dim).map(lambda c: CycScalar.from_coeffs(r, c))


@pytest.mark.parametrize("r, poly", [(3, (1, 1, 1)), (5, (1, 1, 1, 1, 1)), (9, (1, 0, 0, 1, 0, 0, 1))])
def test_cyclotomic_polynomials(r, poly):
    assert cyclotomic_polynomial(r) == poly


@pytest.mark.parametrize("r", [1, 2, 4, 10])
def test_rejects_bad_order(r):
    with pytest.raises(ValueError):
        zeta(r)


def test_small_field_identities():
    z = zeta(3)
    assert (1 + z) * (1 + z ** 2) == 1
    for r in (3, 5, 7, 9):
        assert zeta(r).inv() == zeta(r, r - 1)
        assert zeta(r) ** r == 1
        assert all(zeta(r, a).conj(r - 1) == zeta(r, -a) for a in range(r))
    assert sum((zeta(5, k) for k in range(5)), CycScalar.from_int(5, 0)).is_zero()


def test_composite_order_reduces_modulo_phi():
    # 1 + zeta^3 + zeta^6 = 0 for a primitive ninth root, although 1 + zeta + ... is also 0
    assert (1 + zeta(9, 3) + zeta(9, 6)).is_zero()
    assert not (1 + zeta(9, 1) + zeta(9, 2)).is_zero()


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycScalar.from_int(5, 0).inv()


def test_conj_requires_unit_exponent():
    with pytest.raises(ValueError):
        zeta(9).conj(3)


def test_json_round_trip():
    x = CycScalar.from_coeffs(5, [Fraction(1), Fraction(-2, 3), 0, Fraction(5, 2)])
    data = x.to_json()
    assert all(isinstance(s, str) and "/" in s for s in data)
    assert CycScalar.from_json(5, data) == x


@settings(max_examples=60, deadline=None)
@given(cyc(7), cyc(7), cyc(7))
def test_ring_axioms_r7(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60, deadline=None)
@given(cyc(9))
def test_inverse_r9(a):
    if not a.is_zero():
        assert (a * a.inv()).is_one()


def test_quantum_integers():
    assert qint(2) == LaurentScalar(("q",), {(1,): 1, (-1,): 1})
    assert qbinom(4, 2) == LaurentScalar(("q",), {(4,): 1, (2,): 1, (0,): 2, (-2,): 1, (-4,): 1})
    assert qbinom(3, 5).is_zero() and qbinom(3, -1).is_zero()
    assert qbinom(5 - 1, 2, 5) == 1 and qbinom(5 - 1, 1, 5) == -1
    assert qmultinom(4, (1, 2)) == qbinom(4, 1) * qbinom(3, 2)
    assert qbrace_falling(3, 2) == qbrace(3) * qbrace(2)


def test_specialize():
    for r in (3, 5, 7):
        assert specialize(qint(r), r).is_zero()
        assert specialize(q_var(2 * r), r) == 1
    assert specialize(qbinom(3, 1), 3).is_zero()


def test_gauss_sum_r3():
    # terms zeta^0, zeta^0, zeta^-4
    z = zeta(3)
    assert gauss_sum(0, 3) == 2 + z ** 2 == 1 - z


def test_suite_passes():
    rep = scalars_suite(samples=50)
    assert rep.passed, rep.first_failure()
