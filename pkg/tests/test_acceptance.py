"""The ten acceptance criteria, each run exactly and reported on one line."""

from __future__ import annotations

import os

import pytest

from mcgrep.adjoint import adjoint_suite
from mcgrep.checks import Check, Report
from mcgrep.heisenberg import heisenberg_suite
from mcgrep.homological import (
    deformed_suite,
    generic_relation_checks,
    hom_twist,
    operator_relation_checks,
    spec_compatibility_check,
)
from mcgrep.isomorphism import intertwine_mcg, intertwine_quantum_group, torelli_checks
from mcgrep.linalg import Mismatch, Proportional, SparseOperator
from mcgrep.quantum_mcg import (
    generator_names,
    relation_check,
    relation_table,
    twist_closed,
    twist_hopf,
)
from mcgrep.scalars import CycScalar, qbrace_falling, murakami_sum, scalars_suite
from mcgrep.uqsl2 import closed_form_suite, hopf_axiom_suite, integral_suite, ribbon_suite

EXTENDED = os.environ.get("MCGREP_EXTENDED") == "1"
DESK = [(1, 3), (1, 5), (1, 7), (2, 3)]
SMALL = [(1, 3), (1, 5), (2, 3)]


def _collect(checks: list[Check]) -> tuple[bool, str]:
    bad = [c for c in checks if not c.passed]
    if not bad:
        return True, f"{len(checks)} checks"
    c = bad[0]
    return False, f"{len(bad)} of {len(checks)} failed; first: {c.name}: {c.detail}"


def _report(capsys, number: int, title: str, checks: list[Check]) -> None:
    ok, summary = _collect(checks)
    with capsys.disabled():
        print(f"\nCRITERION {number:2d} {'PASS' if ok else 'FAIL'}: {title} ({summary})")
    assert ok, summary


def _proj(name: str, res: Proportional | Mismatch) -> Check:
    return Check(name, isinstance(res, Proportional), 1, "" if isinstance(res, Proportional) else str(res))


def test_criterion_01_hopf_ribbon_integral(capsys):
    checks: list[Check] = []
    for r in (3, 5, 7):
        for rep in (hopf_axiom_suite(r), ribbon_suite(r), integral_suite(r)):
            checks += [Check(f"r={r} {c.name}", c.passed, c.cases, c.detail) for c in rep.checks]
    _report(capsys, 1, "Hopf, ribbon, integral and factorizability axioms, r in {3,5,7}", checks)


def test_criterion_02_adjoint_closed_vs_generic(capsys):
    checks = []
    for g, r in DESK:
        rep = adjoint_suite(g, r)
        checks += [Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail)
                   for c in rep.checks if c.name.startswith("closed")]
    assert len(checks) == 3 * len(DESK)
    _report(capsys, 2, "closed adjoint action equals x_(1) y S(x_(2)) on every basis vector", checks)


def test_criterion_03_twist_closed_forms(capsys):
    checks = []
    for g, r in DESK:
        for name in generator_names(g):
            closed, hopf = twist_closed(name, g, r), twist_hopf(name, g, r)
            label = f"(g,r)=({g},{r}) {name}"
            if name.startswith("a"):
                checks.append(Check(f"{label} exact", closed == hopf, 1))
            else:
                checks.append(_proj(f"{label} projective", closed.compare_projective(hopf)))
    _report(capsys, 3, "Dehn-twist closed forms against their Hopf forms", checks)


def test_criterion_04_homological_operators(capsys):
    checks: list[Check] = []
    for g in (1, 2):
        checks += generic_relation_checks(g, 2)
    for g, r in SMALL:
        for gen in ("E", "F1", "K"):
            c = spec_compatibility_check(g, r, gen)
            checks.append(Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail))
        checks += [Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail)
                   for c in operator_relation_checks(g, r) if c.name.endswith("= 0")]
    _report(capsys, 4, "generic relations over Z[H_g], specialization, E^r = F1^r = 0", checks)


def test_criterion_05_crossed_identity_and_local_system(capsys):
    checks = []
    for g, r in SMALL:
        rep = heisenberg_suite(g, r)
        checks += [Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail) for c in rep.checks]
    assert any(c.name.endswith("crossed identity psi(f) phi(x) = phi(f_* x) psi(f)") for c in checks)
    assert any("commutant is one-dimensional" in c.name for c in checks)
    _report(capsys, 5, "crossed identity and the Heisenberg local system", checks)


def test_criterion_06_mcg_relations_both_sides(capsys):
    checks = []
    for g, r in SMALL:
        for builder, side in ((twist_closed, "adjoint"), (hom_twist, "homological")):
            for kind, x, y in relation_table(g):
                checks.append(_proj(f"(g,r)=({g},{r}) {side} {kind}({x},{y})", relation_check(kind, x, y, g, r, builder)))
    for r in (3, 5):
        A = twist_closed("a1", 1, r)
        res = (A ** r).compare_projective(SparseOperator.identity(A.dim, CycScalar.from_int(r, 1)))
        checks.append(Check(f"r={r} rho(alpha)^r not proportional to 1", isinstance(res, Mismatch), 1))
    _report(capsys, 6, "braid and commutation relations on both sides; rho(alpha)^r is not scalar", checks)


def test_criterion_07_main_theorem(capsys):
    cases = DESK + ([(2, 5)] if EXTENDED else [])
    checks = []
    for g, r in cases:
        for c in intertwine_quantum_group(g, r) + intertwine_mcg(g, r):
            checks.append(Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail))
    _report(capsys, 7, "Phi intertwines E, F1, K exactly and every twist projectively", checks)


def test_criterion_08_torelli_integrality(capsys):
    checks = []
    for g, r in SMALL:
        checks += [Check(f"(g,r)=({g},{r}) {c.name}", c.passed, c.cases, c.detail) for c in torelli_checks(g, r)]
    assert any(c.name.startswith("(g,r)=(2,3) (a1 b1)^6") for c in checks)
    _report(capsys, 8, "Torelli integrality in the Phi-conjugated basis", checks)


def test_criterion_09_deformed_representation(capsys):
    rep: Report = deformed_suite(1, 3)
    _report(capsys, 9, "deformed relations over Z[zeta][s,t] and s = t = 1", rep.checks)


def test_criterion_10_closed_form_identities(capsys):
    checks = [Check(
        "Murakami formula, n in [-5,5], k in [0,6]",
        all(qbrace_falling(n, k) == murakami_sum(n, k) for n in range(-5, 6) for k in range(7)),
        77,
    )]
    checks += [c for c in scalars_suite(rs=(3, 5)).checks if c.name.startswith(("Murakami", "Pascal"))]
    for r in (3, 5):
        checks += [Check(f"r={r} {c.name}", c.passed, c.cases, c.detail) for c in closed_form_suite(r).checks]
        checks += [Check(f"r={r} {c.name}", c.passed, c.cases, c.detail) for c in ribbon_suite(r).checks
                   if "closed forms" in c.name or c.name == "v = u K^{-1}"]
    _report(capsys, 10, "Murakami formula; coproduct, antipode, ribbon and commutator formulas", checks)


@pytest.mark.skipif(not EXTENDED, reason="set MCGREP_EXTENDED=1 for the (g,r) = (2,5) run")
def test_extended_homological_2_5():
    for gen in ("E", "F1", "K"):
        assert spec_compatibility_check(2, 5, gen).passed
