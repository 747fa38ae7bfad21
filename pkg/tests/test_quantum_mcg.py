import pytest

from mcgrep.adjoint import ad_index
from mcgrep.linalg import Mismatch, Proportional, SparseOperator
from mcgrep.quantum_mcg import (
    MCGWord,
    Token,
    evaluate_word,
    generator_names,
    integrality_check,
    quantum_mcg_suite,
    relation_check,
    relation_table,
    twist_closed,
    twist_hopf,
)
from mcgrep.scalars import CycScalar, zeta


def identity(g, r):
    return SparseOperator.identity(r ** (3 * g), CycScalar.from_int(r, 1))


def test_alpha_on_projector():
    r = 3
    col = twist_closed("a1", 1, r).column(ad_index(r, ((0, 0, 0),)))
    want = {
        ad_index(r, ((0, 0, 0),)): CycScalar.from_int(r, 1),
        ad_index(r, ((1, 1, 1),)): zeta(r, 2),
        ad_index(r, ((2, 2, 2),)): zeta(r, 2),
    }
    assert col == want


@pytest.mark.parametrize("r", [3, 5])
def test_alpha_closed_equals_hopf(r):
    assert twist_closed("a1", 1, r) == twist_hopf("a1", 1, r)


@pytest.mark.parametrize("name", ["b1", "g1"])
def test_beta_gamma_closed_projective_to_hopf(name):
    g = 2 if name == "g1" else 1
    assert isinstance(twist_closed(name, g, 3).compare_projective(twist_hopf(name, g, 3)), Proportional)


def test_parse_words():
    w = MCGWord.parse("(a1 b1)^2 a1^-2", 1)
    assert [str(t) for t in w.tokens] == ["a1", "b1", "a1", "b1", "a1^-1", "a1^-1"]
    assert MCGWord.parse("(a1 b1)^-1", 1).tokens == (Token("b", 1, -1), Token("a", 1, -1))
    assert MCGWord.parse("", 1).tokens == ()


@pytest.mark.parametrize("bad,g", [("c1", 1), ("a2", 1), ("g1", 1), ("(a1", 1), ("a1)", 1)])
def test_parse_errors(bad, g):
    with pytest.raises(ValueError):
        MCGWord.parse(bad, g)


def test_word_identities():
    r = 3
    assert evaluate_word(MCGWord.parse("", 1), r) == identity(1, r)
    assert evaluate_word(MCGWord.parse("a1 a1^-1", 1), r) == identity(1, r)
    M = evaluate_word(MCGWord.parse("(a1 b1)^6", 1), r)
    assert isinstance(M.compare_projective(identity(1, r)), Mismatch)


@pytest.mark.parametrize("r", [3, 5])
def test_braid_relation(r):
    assert isinstance(relation_check("braid", "a1", "b1", 1, r), Proportional)


def test_disjoint_twists_commute_exactly():
    a1, a2 = twist_closed("a1", 2, 3), twist_closed("a2", 2, 3)
    assert a1 @ a2 == a2 @ a1


def test_relation_table_genus_two():
    table = relation_table(2)
    assert ("braid", "a1", "b1") in table
    assert ("commute", "a1", "a2") in table
    assert generator_names(2) == ["a1", "a2", "b1", "b2", "g1"]


def test_identity_is_integral():
    ok, c, _ = integrality_check(identity(1, 3))
    assert ok and c == CycScalar.from_int(3, 1)


def test_suite_passes():
    assert quantum_mcg_suite(1, 3).passed
