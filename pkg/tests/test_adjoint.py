import random

import pytest

from mcgrep.adjoint import (
    AdVector,
    ad_basis,
    ad_index,
    ad_tuple,
    adjoint_act_closed,
    adjoint_act_generic,
    adjoint_suite,
    generator_element,
    generator_operator,
    matrix_to_json,
)
from mcgrep.scalars import CycScalar, zeta


def vec(r, *key):
    return AdVector.basis_vector(r, tuple(key))


def test_K_scales_by_weight():
    r = 3
    v = vec(r, (1, 0, 0))
    assert adjoint_act_closed("K", v) == v.scale(zeta(r, 2))


def test_E_on_projector():
    r = 3
    got = adjoint_act_closed("E", vec(r, (0, 0, 0)))
    want = AdVector(r, 1, {((1, 0, 0),): CycScalar.from_int(r, 1), ((1, 1, 0),): -zeta(r, 2)})
    assert got == want


@pytest.mark.parametrize("r", [3, 5])
def test_F1_on_top_divided_power_has_no_vanishing_terms(r):
    y = adjoint_act_closed("F1", vec(r, (0, 0, r - 1)))
    assert all(not c.is_zero() for c in y.terms.values())
    assert y == adjoint_act_generic(generator_element("F1", r), vec(r, (0, 0, r - 1)))


@pytest.mark.parametrize("g,r", [(1, 3), (1, 5), (2, 3)])
@pytest.mark.parametrize("gen", ["E", "F1", "K"])
def test_closed_matches_generic_on_random_vectors(g, r, gen):
    rng = random.Random(g * 100 + r)
    keys = list(ad_basis(r, g))
    x = generator_element(gen, r)
    for _ in range(5):
        terms = {k: zeta(r, rng.randrange(r)) for k in rng.sample(keys, 3)}
        y = AdVector(r, g, terms)
        assert adjoint_act_closed(gen, y) == adjoint_act_generic(x, y)


def test_index_round_trip():
    r, g = 3, 2
    for i in range(r ** (3 * g)):
        assert ad_index(r, ad_tuple(r, g, i)) == i


def test_bad_key_rejected():
    with pytest.raises(ValueError):
        AdVector(3, 1, {((3, 0, 0),): CycScalar.from_int(3, 1)})
    with pytest.raises(ValueError):
        adjoint_act_closed("X", vec(3, (0, 0, 0)))


def test_matrix_json_shape():
    op = generator_operator("K", 1, 3)
    data = matrix_to_json(op, 3, 1)
    assert data["basis"] == "ETF-lex"
    assert len(data["entries"]) == 27


def test_suite_passes():
    assert adjoint_suite(1, 3).passed
