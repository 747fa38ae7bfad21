import pytest

from mcgrep.heisenberg import (
    BraidGenerator,
    HeisRingElem,
    HeisWord,
    braid_matrix,
    braid_pushforward,
    braid_to_heis,
    commutant_dimension,
    heis_word_matrix,
    heisenberg_suite,
    matrix_coords_product,
    psi_inverse,
    psi_matrix,
    schrodinger_matrices,
)
from mcgrep.linalg import SparseOperator
from mcgrep.scalars import CycScalar, zeta


def eye(n, r):
    return SparseOperator.identity(n, CycScalar.from_int(r, 1))


def test_word_law():
    g = 2
    a1, b1, a2 = HeisWord.alpha(g, 1), HeisWord.beta(g, 1), HeisWord.alpha(g, 2)
    assert a1 * b1 == HeisWord.q(g, 4) * b1 * a1
    assert a1 * a2 == a2 * a1
    q = HeisWord.q(g)
    for x in (a1, b1, a2, HeisWord.beta(g, 2)):
        assert q * x == x * q
    assert a1 * a1.inverse() == HeisWord.identity(g)


def test_matrix_coordinates_agree_with_word_law():
    g = 1
    x = HeisWord.alpha(g, 1, 2) * HeisWord.beta(g, 1, -1)
    y = HeisWord.beta(g, 1, 3) * HeisWord.q(g, 5)
    assert matrix_coords_product(x.matrix_coords(), y.matrix_coords()) == (x * y).matrix_coords()


def test_json_round_trip():
    w = HeisWord.q(2, 3) * HeisWord.alpha(2, 1) * HeisWord.beta(2, 2, -2)
    assert HeisWord.from_json(w.to_json()) == w


def test_schrodinger_genus_one():
    r = 3
    ((A, B),) = schrodinger_matrices(1, r)
    assert A == SparseOperator(3, {c: {c: zeta(r, c)} for c in range(3)}, CycScalar.from_int(r, 1))
    assert B == SparseOperator(3, {c: {(c + 1) % 3: CycScalar.from_int(r, 1)} for c in range(3)}, CycScalar.from_int(r, 1))
    assert A @ B @ A.inverse() @ B.inverse() == eye(3, r).scale(zeta(r, 4))
    assert commutant_dimension([A, B], r) == 1


def test_word_matrix_is_representation():
    r, g = 5, 1
    x, y = HeisWord.alpha(g, 1, 2), HeisWord.beta(g, 1, 3) * HeisWord.q(g)
    assert heis_word_matrix(x * y, r) == heis_word_matrix(x, r) @ heis_word_matrix(y, r)


def test_sigma_goes_to_minus_q_inverse_squared():
    r = 3
    assert braid_to_heis([BraidGenerator("sigma", 1)], 1) == HeisRingElem.word(HeisWord.q(1, -2), -1)
    assert braid_matrix([BraidGenerator("sigma", 1)], 1, r) == eye(3, r).scale(-zeta(r, -2))


def test_psi_alpha_genus_one():
    r = 3
    ((A, _),) = schrodinger_matrices(1, r)
    want = eye(3, r) + A + (A @ A).scale(zeta(r, 2))
    assert psi_matrix("a1", 1, r) == want


@pytest.mark.parametrize("g,r,gen", [(1, 3, "a1"), (1, 3, "b1"), (1, 5, "b1"), (2, 3, "g1")])
def test_psi_inverse(g, r, gen):
    assert psi_matrix(gen, g, r) @ psi_inverse(gen, g, r) == eye(r ** g, r)


def test_pushforwards():
    a1, b1, s1 = BraidGenerator("alpha", 1), BraidGenerator("beta", 1), BraidGenerator("sigma", 1)
    assert braid_pushforward("a1", b1) == [a1, b1]
    assert braid_pushforward("b1", s1) == [s1]
    with pytest.raises(ValueError):
        braid_pushforward("a1", a1)


@pytest.mark.parametrize("g,r", [(1, 3), (1, 5)])
def test_suite_passes(g, r):
    assert heisenberg_suite(g, r).passed
