import pytest

from mcgrep.adjoint import AdVector, ad_basis
from mcgrep.homological import HomVector, hom_basis
from mcgrep.isomorphism import (
    iso_suite,
    matched_generator,
    normalization_exponent,
    phi_forward,
    phi_inverse,
    phi_map,
)
from mcgrep.linalg import SparseOperator
from mcgrep.quantum_mcg import integrality_check
from mcgrep.scalars import CycScalar, zeta


def test_vacuum_goes_to_top_E_power():
    r = 3
    x = HomVector.basis("spec", 1, r, ((0,), (0,), (0,)))
    assert phi_forward(x) == AdVector.basis_vector(r, ((r - 1, 0, 0),))


@pytest.mark.parametrize("r", [3, 5])
def test_normalized_example(r):
    x = HomVector.basis("spec", 1, r, ((1,), (1,), (1,)))
    assert phi_forward(x) == AdVector.basis_vector(r, ((r - 2, 1, 1),)).scale(zeta(r, 2))


@pytest.mark.parametrize("g,r", [(1, 3), (1, 5), (2, 3)])
def test_round_trip(g, r):
    for key in hom_basis(r, g):
        x = HomVector.basis("spec", g, r, key).scale(zeta(r, 1))
        assert phi_inverse(phi_forward(x)) == x
    for key in list(ad_basis(r, g))[:50]:
        y = AdVector.basis_vector(r, key)
        assert phi_forward(phi_inverse(y)) == y


def test_phi_is_monomial():
    phi = phi_map(2, 3)
    op = phi.operator()
    assert all(len(c) == 1 for c in op.cols.values()) and len(op.cols) == phi.dim
    ident = SparseOperator.identity(phi.dim, CycScalar.from_int(3, 1))
    assert op @ phi.inverse_operator() == ident
    assert phi.conjugate_to_adjoint(ident) == ident


def test_normalization_needs_even_triangle():
    assert normalization_exponent((0,), (0,), (0,)) == 0
    assert normalization_exponent((1,), (1,), (1,)) == 2


def test_matched_generators():
    assert matched_generator("a1", 1) == "a1"
    assert [matched_generator(n, 3) for n in ("a1", "b3", "g1", "g2")] == ["a3", "b1", "g2", "g1"]


def test_identity_witness():
    ok, c, _ = integrality_check(SparseOperator.identity(27, CycScalar.from_int(3, 1)))
    assert ok and c.is_one()


def test_json_export():
    data = phi_map(1, 3).to_json()
    assert data["dims"] == [27, 27]
    assert sorted(data["perm"]) == list(range(27))
    assert len(data["scalars"]) == 27


@pytest.mark.parametrize("g,r", [(1, 3), (1, 5)])
def test_suite_passes(g, r):
    assert iso_suite(g, r).passed
