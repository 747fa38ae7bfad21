"""The monomial isomorphism Phi from the small homological module to ad^{(x)g},
and the checks that it intertwines the quantum-group action and the twists.

Phi(Gamma(a, b) (x) v_c) = N(a, b, c) E^{iota(rev b)} T_{rev c} F^{(rev a)}, where
rev reverses the order of the g factors and iota(k)_j = r - 1 - k_j. Because of
the reversal, homological factor j sits in adjoint factor g + 1 - j.
"""

from __future__ import annotations

from functools import lru_cache

from .adjoint import AdVector, ad_index, ad_tuple, adjoint_act_closed
from .checks import Check, Report, check_all, check_equal
from .homological import HomVector, hom_basis, hom_index, hom_key, hom_twist, op_E_spec, op_F1_spec, op_K_spec
from .linalg import Proportional, SparseOperator
from .quantum_mcg import (
    MCGWord,
    _describe,
    evaluate_word,
    generator_names,
    integrality_check,
    torelli_words,
    twist_closed,
    validate_generator,
)
from .scalars import CycScalar, zeta

__all__ = [
    "PhiMap",
    "intertwine_mcg",
    "intertwine_quantum_group",
    "iso_suite",
    "matched_generator",
    "normalization_exponent",
    "phi_forward",
    "phi_inverse",
    "phi_map",
    "torelli_checks",
]

_OPS = {"E": op_E_spec, "F1": op_F1_spec, "K": op_K_spec}


def normalization_exponent(a, b, c) -> int:
    """The zeta-exponent of N(a, b, c), computed over the integers."""
    g = len(a)
    e = 0
    for j in range(g):
        for k in range(j + 1, g):
            e += 2 * (a[j] + b[j]) * (a[k] + b[k])
    for j in range(g):
        tri = a[j] * (a[j] - 1)
        assert tri % 2 == 0
        e += 2 * (a[j] + b[j]) * j + tri // 2 + 2 * a[j] * b[j] - 2 * (b[j] - 1) * c[j]
    return e


def _target(r: int, key) -> tuple:
    a, b, c = key
    g = len(a)
    return tuple((r - 1 - b[g - 1 - i], c[g - 1 - i], a[g - 1 - i]) for i in range(g))


def _source(r: int, key) -> tuple:
    g = len(key)
    rev = key[::-1]
    return (
        tuple(t[2] for t in rev),
        tuple(r - 1 - t[0] for t in rev),
        tuple(t[1] for t in rev),
    )


class PhiMap:
    """Phi as a permutation of basis indices together with its zeta-power scalars."""

    def __init__(self, g: int, r: int) -> None:
        self.g, self.r = g, r
        dim = r ** (3 * g)
        self.perm: list[int] = [0] * dim
        self.exponents: list[int] = [0] * dim
        for i in range(dim):
            key = hom_key(r, g, i)
            self.perm[i] = ad_index(r, _target(r, key))
            self.exponents[i] = normalization_exponent(*key) % r
        if sorted(self.perm) != list(range(dim)):
            raise AssertionError("index transform is not a bijection")

    @property
    def dim(self) -> int:
        return len(self.perm)

    def scalar(self, i: int) -> CycScalar:
        return zeta(self.r, self.exponents[i])

    def operator(self) -> SparseOperator:
        one = CycScalar.from_int(self.r, 1)
        return SparseOperator(self.dim, {i: {self.perm[i]: self.scalar(i)} for i in range(self.dim)}, one)

    def inverse_operator(self) -> SparseOperator:
        one = CycScalar.from_int(self.r, 1)
        return SparseOperator(self.dim, {self.perm[i]: {i: zeta(self.r, -self.exponents[i])} for i in range(self.dim)}, one)

    def conjugate_to_adjoint(self, M: SparseOperator) -> SparseOperator:
        """Phi M Phi^{-1}."""
        return self.operator() @ M @ self.inverse_operator()

    def conjugate_to_homological(self, M: SparseOperator) -> SparseOperator:
        """Phi^{-1} M Phi."""
        return self.inverse_operator() @ M @ self.operator()

    def to_json(self) -> dict:
        return {
            "dims": [self.dim, self.dim],
            "perm": list(self.perm),
            "scalars": [self.scalar(i).to_json() for i in range(self.dim)],
        }


@lru_cache(maxsize=None)
def phi_map(g: int, r: int) -> PhiMap:
    return PhiMap(g, r)


def phi_forward(x: HomVector) -> AdVector:
    if x.flavor != "spec":
        raise ValueError("phi_forward expects a spec vector")
    r = x.r
    out = {}
    for key, v in x.terms.items():
        out[_target(r, key)] = v * zeta(r, normalization_exponent(*key))
    return AdVector(r, x.g, out)


def phi_inverse(y: AdVector) -> HomVector:
    r = y.r
    out = {}
    for key, v in y.terms.items():
        src = _source(r, key)
        out[src] = v * zeta(r, -normalization_exponent(*src))
    return HomVector("spec", y.g, r, out)


def matched_generator(name: str, g: int) -> str:
    """The adjoint-side twist corresponding to a homological twist under Phi."""
    kind, j = validate_generator(name, g)
    if kind == "g":
        return f"g{g - j}"
    return f"{kind}{g + 1 - j}"


def intertwine_quantum_group(g: int, r: int) -> list[Check]:
    """Phi(X xi) = X |> Phi(xi) exactly, for X in E, F1, K and every basis vector xi."""
    out = []
    for gen, op in _OPS.items():
        def case(key, gen=gen, op=op):
            xi = HomVector.basis("spec", g, r, key)
            return phi_forward(op(xi)), adjoint_act_closed(gen, phi_forward(xi))

        out.append(check_equal(f"Phi intertwines {gen} exactly", ((k, lambda k=k, case=case: case(k)) for k in hom_basis(r, g))))
    return out


def intertwine_mcg(g: int, r: int) -> list[Check]:
    """Phi rho_hom(tau) Phi^{-1} = c_tau rho_ad(tau') for each twist generator."""
    phi = phi_map(g, r)
    out = []
    for name in generator_names(g):
        other = matched_generator(name, g)
        res = phi.conjugate_to_adjoint(hom_twist(name, g, r)).compare_projective(twist_closed(other, g, r))
        out.append(Check(f"Phi conjugates homological {name} to adjoint {other} projectively",
                         isinstance(res, Proportional), 1, _describe(res)))
    return out


def torelli_checks(g: int, r: int) -> list[Check]:
    """Integrality of (a_j b_j)^6 in the homological basis, from both sides."""
    phi = phi_map(g, r)
    out = []
    for j, w in enumerate(torelli_words(g), start=1):
        label_word = f"(a{j} b{j})^6"
        quantum = phi.conjugate_to_homological(evaluate_word(w, r))
        hom = evaluate_word(_matched_word(w, g), r, builder=hom_twist)
        for label, M in (("adjoint word conjugated by Phi", quantum), ("homological word", hom)):
            ok, c, detail = integrality_check(M)
            out.append(Check(f"{label_word} integral ({label})", ok, 1, f"witness {c}" if ok else detail))
    return out


def _matched_word(w: MCGWord, g: int) -> MCGWord:
    """Rewrite an adjoint-side word in terms of the matching homological generators."""
    back = {matched_generator(n, g): n for n in generator_names(g)}
    text = " ".join(f"{back[t.name]}^{t.exp}" for t in w.tokens)
    return MCGWord.parse(text, g)


def iso_suite(g: int, r: int, torelli: bool = True) -> Report:
    rep = Report("iso", {"g": g, "r": r})
    phi = phi_map(g, r)
    dim = phi.dim
    rep.add(check_all("Phi is a monomial bijection with zeta-power scalars",
                      [("perm", lambda: sorted(phi.perm) == list(range(dim)))]))
    rep.add(check_all(
        "phi_inverse o phi_forward = identity",
        ((k, lambda k=k: phi_inverse(phi_forward(HomVector.basis("spec", g, r, k))) == HomVector.basis("spec", g, r, k))
         for k in hom_basis(r, g)),
    ))
    rep.add(check_all(
        "phi_forward agrees with the Phi matrix",
        ((i, lambda i=i: AdVector.from_column(r, g, phi.operator().column(i))
          == phi_forward(HomVector.basis("spec", g, r, hom_key(r, g, i)))) for i in range(0, dim, max(1, dim // 64))),
    ))
    for c in intertwine_quantum_group(g, r):
        rep.add(c)
    for c in intertwine_mcg(g, r):
        rep.add(c)
    if torelli:
        for c in torelli_checks(g, r):
            rep.add(c)
    return rep
