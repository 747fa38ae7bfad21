import json

import pytest

from mcgrep.heisenberg import HeisRingElem, HeisWord
from mcgrep.homological import (
    HomVector,
    deformed_suite,
    hom_basis,
    hom_index,
    hom_key,
    hom_operator,
    hom_twist,
    homological_suite,
    op_E_generic,
    op_E_spec,
    op_F1_generic,
    op_Ftilde_k,
    op_K_generic,
    op_K_spec,
    specialize_vector,
)
from mcgrep.scalars import CycScalar, zeta


def gen_basis(g, a, b):
    return HomVector.basis("generic", g, None, (a, b))


def spec_basis(r, a, b, c):
    return HomVector.basis("spec", len(a), r, (a, b, c))


@pytest.mark.parametrize("a,b", [((0,), (0,)), ((1,), (2,)), ((0, 1), (1, 1))])
def test_generic_K_weight(a, b):
    g = len(a)
    x = gen_basis(g, a, b)
    q = HeisRingElem.word(HeisWord.q(g, -2 * (sum(a) + sum(b) + g)))
    assert op_K_generic(x) == x.scale(q)


def test_generic_low_degree():
    x = gen_basis(1, (0,), (0,))
    assert op_E_generic(x).terms == {}
    comm = op_E_generic(op_F1_generic(x)) - op_F1_generic(op_E_generic(x))
    c = HeisRingElem.word(HeisWord.q(1, -2)) - HeisRingElem.word(HeisWord.q(1, 2))
    assert comm == x.scale(c)


def test_ftilde_zero_is_identity():
    x = gen_basis(1, (1,), (2,))
    assert op_Ftilde_k(x, 0) == x


def test_spec_K_and_E_genus_one():
    r = 3
    for c in range(r):
        x = spec_basis(r, (1,), (0,), (c,))
        assert op_K_spec(x) == x.scale(zeta(r, -4))
    assert op_E_spec(spec_basis(r, (1,), (0,), (0,))).terms == {}


def test_specialization_matches_closed_form():
    r = 5
    x = gen_basis(1, (1,), (1,))
    for c in range(r):
        y = specialize_vector(x, (c,), r)
        assert specialize_vector(op_E_generic(x), (c,), r) == op_E_spec(y)
        F1 = hom_operator("F1", 1, r)
        want = F1.apply({hom_index(r, k): v for k, v in y.terms.items()})
        got = specialize_vector(op_F1_generic(x), (c,), r)
        assert {hom_index(r, k): v for k, v in got.terms.items()} == want


def test_alpha_twist_examples():
    r = 3
    M = hom_twist("a1", 1, r)
    col = M.column(hom_index(r, ((0,), (1,), (0,))))
    one = CycScalar.from_int(r, 1)
    assert col == {hom_index(r, ((0,), (1,), (0,))): one, hom_index(r, ((1,), (0,), (1,))): one}
    for a in range(r):
        for c in range(r):
            i = hom_index(r, ((a,), (0,), (c,)))
            assert M.column(i) == {i: zeta(r, 2 * (c + 1) * c)}


def test_index_round_trip():
    r, g = 3, 2
    keys = list(hom_basis(r, g))
    assert len(keys) == r ** 6
    for i, k in enumerate(keys):
        assert hom_index(r, k) == i and hom_key(r, g, i) == k


def test_vector_validation():
    with pytest.raises(ValueError):
        HomVector("spec", 1, 3, {((3,), (0,), (0,)): CycScalar.from_int(3, 1)})
    with pytest.raises(ValueError):
        HomVector("spec", 1, None, {})
    with pytest.raises(ValueError):
        HomVector("other", 1, 3, {})


def test_json_schema():
    x = spec_basis(3, (1,), (0,), (2,)).scale(zeta(3))
    data = json.loads(json.dumps(x.to_json()))
    assert data["flavor"] == "spec" and data["g"] == 1 and data["r"] == 3
    assert data["terms"] == [{"a": [1], "b": [0], "c": [2], "coeff": str(zeta(3))}]
    gdata = gen_basis(1, (0,), (1,)).to_json()
    assert "c" not in gdata["terms"][0] and isinstance(gdata["terms"][0]["coeff"], list)


def test_deformed_operator_reduces_at_one():
    r = 3
    x = HomVector.basis("deformed", 1, r, ((0,), (1,), (1,)))
    y = op_E_spec(x)
    spec = op_E_spec(spec_basis(r, (0,), (1,), (1,)))
    one = CycScalar.from_int(r, 1)
    at_one = {k: v.substitute([one, one]) for k, v in y.terms.items()}
    assert {k: v for k, v in at_one.items() if not v.is_zero()} == spec.terms


@pytest.mark.parametrize("g,r", [(1, 3), (1, 5)])
def test_suites_pass(g, r):
    assert homological_suite(g, r).passed


def test_deformed_suite_passes():
    assert deformed_suite(1, 3).passed
